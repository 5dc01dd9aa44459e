//! The functor R from sliced S-modules to linear free complexes over E, and
//! its inverse reading on linear complexes.

use crate::efree::{FreeEModule, GradedMap};
use crate::error::{Error, Result};
use crate::extalg::{AlgebraContext, ExtElement, ExtMonomial};
use crate::linalg::Matrix;
use crate::smod::{PolyRing, SlicedModule};

/// Sign convention for `d(m) = sum_k s_k x_k m (x) e_k`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum BggSigns {
    /// `s_k = (-1)^k`.
    #[default]
    Alternating,
    /// `s_k = 1`.
    Plain,
}

impl BggSigns {
    fn negative(self, k: usize) -> bool {
        self == BggSigns::Alternating && k % 2 == 1
    }
}

/// A complex of free E-modules whose position `i` is generated in degree `i`
/// and whose differentials have linear entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearComplex {
    lo: i32,
    modules: Vec<FreeEModule>,
    // maps[i - lo]: position i -> i + 1
    maps: Vec<GradedMap>,
}

impl LinearComplex {
    pub fn new(lo: i32, modules: Vec<FreeEModule>, maps: Vec<GradedMap>) -> Result<Self> {
        if modules.is_empty() || maps.len() + 1 != modules.len() {
            return Err(Error::Invalid("a complex needs one map between consecutive positions".into()));
        }
        for (k, m) in modules.iter().enumerate() {
            let pos = lo + k as i32;
            if m.degrees().iter().any(|&g| g != pos) {
                return Err(Error::Invalid(format!("position {pos} has a generator outside degree {pos}")));
            }
        }
        for (k, f) in maps.iter().enumerate() {
            if f.source() != &modules[k] || f.target() != &modules[k + 1] {
                return Err(Error::Invalid(format!("differential at {} does not match its positions", lo + k as i32)));
            }
            if let Some((row, col)) = nonlinear_entry(f) {
                return Err(Error::NonLinear { row, col });
            }
        }
        for (k, w) in maps.windows(2).enumerate() {
            if !w[0].then(&w[1])?.is_zero() {
                return Err(Error::NotAComplex { position: lo + k as i32 });
            }
        }
        Ok(LinearComplex { lo, modules, maps })
    }

    pub fn lo(&self) -> i32 {
        self.lo
    }

    pub fn hi(&self) -> i32 {
        self.lo + self.modules.len() as i32 - 1
    }

    pub fn module(&self, i: i32) -> &FreeEModule {
        &self.modules[(i - self.lo) as usize]
    }

    /// The differential out of position `i`.
    pub fn map(&self, i: i32) -> &GradedMap {
        &self.maps[(i - self.lo) as usize]
    }

    pub fn maps(&self) -> &[GradedMap] {
        &self.maps
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.modules.iter().map(|m| m.rank()).collect()
    }

    /// `dim ker d^i - dim im d^{i-1}`, summed over all degrees.
    pub fn exactness_defect(&self, i: i32) -> Result<usize> {
        if i <= self.lo || i >= self.hi() {
            return Err(Error::OutOfWindow { position: i, lo: self.lo + 1, hi: self.hi() - 1 });
        }
        Ok(homology_dim(self.map(i - 1), self.map(i)))
    }
}

fn nonlinear_entry(f: &GradedMap) -> Option<(usize, usize)> {
    for (r, row) in f.entries().iter().enumerate() {
        for (c, e) in row.iter().enumerate() {
            if !e.is_zero() && e.degree() != -1 {
                return Some((r, c));
            }
        }
    }
    None
}

/// True iff every nonzero entry is a linear form.
pub fn is_linear(f: &GradedMap) -> bool {
    nonlinear_entry(f).is_none()
}

/// Total dimension of the homology of `A -f-> B -g-> C` at `B`.
pub fn homology_dim(f: &GradedMap, g: &GradedMap) -> usize {
    let field = *g.ctx().field();
    let Some((lo, hi)) = g.source().support() else {
        return 0;
    };
    (lo..=hi)
        .map(|d| {
            let dim = g.source().slice_dim(d);
            dim - g.slice_matrix(d).rank(&field) - f.slice_matrix(d).rank(&field)
        })
        .sum()
}

/// `R(M)`: position `i` is `M_i (x) E(-i)`, for every slice in the window.
pub fn bgg_r(m: &SlicedModule) -> Result<LinearComplex> {
    bgg_r_with(m, BggSigns::default())
}

pub fn bgg_r_with(m: &SlicedModule, signs: BggSigns) -> Result<LinearComplex> {
    let ring = m.ring();
    let ctx = AlgebraContext::new(ring.n(), *ring.field())?;
    let f = ring.field();
    let modules: Vec<FreeEModule> = (m.lo()..=m.hi()).map(|i| FreeEModule::new(&ctx, vec![i; m.dim(i)])).collect();
    let mut maps = Vec::new();
    for i in m.lo()..m.hi() {
        let mults: Vec<Matrix> = (0..ring.vars()).map(|k| m.mult(k, i)).collect();
        let (src, tgt) = (m.dim(i), m.dim(i + 1));
        let entries = (0..tgt)
            .map(|r| {
                (0..src)
                    .map(|b| {
                        let terms = mults.iter().enumerate().filter_map(|(k, a)| {
                            let c = a.get(b, r);
                            (c != 0).then(|| (ExtMonomial::var(k), if signs.negative(k) { f.neg(c) } else { c }))
                        });
                        ExtElement::from_terms(f, -1, terms)
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let k = (i - m.lo()) as usize;
        maps.push(GradedMap::new(modules[k].clone(), modules[k + 1].clone(), entries)?);
    }
    LinearComplex::new(m.lo(), modules, maps)
}

/// Reads a linear complex back as an S-module: `M_i` is the generator space
/// at position `i`, and `x_k` acts by the coefficients of `e_k`.
pub fn bgg_l_read(c: &LinearComplex) -> Result<SlicedModule> {
    bgg_l_read_with(c, BggSigns::default())
}

pub fn bgg_l_read_with(c: &LinearComplex, signs: BggSigns) -> Result<SlicedModule> {
    let ctx = c.module(c.lo()).ctx().clone();
    let f = *ctx.field();
    let ring = PolyRing::new(ctx.n(), f);
    let dims: Vec<usize> = (c.lo()..=c.hi()).map(|i| c.module(i).rank()).collect();
    let mult = c
        .maps()
        .iter()
        .map(|map| {
            (0..ctx.vars())
                .map(|k| {
                    let mut a = Matrix::zeros(map.source().rank(), map.target().rank());
                    for (r, row) in map.entries().iter().enumerate() {
                        for (b, e) in row.iter().enumerate() {
                            let v = e.coefficient(ExtMonomial::var(k));
                            a.set(b, r, if signs.negative(k) { f.neg(v) } else { v });
                        }
                    }
                    a
                })
                .collect()
        })
        .collect();
    SlicedModule::new(ring, c.lo(), dims, mult)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::efree::parse_emat;
    use crate::extalg::FieldContext;
    use crate::smod::{parse_smod, SPresentation};

    fn free_s(n: usize, hi: i32) -> SlicedModule {
        SlicedModule::slice(&SPresentation::free(PolyRing::new(n, FieldContext::default()), vec![0]), 0, hi).unwrap()
    }

    fn cubic(hi: i32) -> SlicedModule {
        let p = parse_smod("ring n=2\nrowdegs=[0] coldegs=[3]\nentry 0 0 : x0^3 + x1^3 + x2^3\n").unwrap();
        SlicedModule::slice(&p, 0, hi).unwrap()
    }

    #[test]
    fn residue_field_gives_one_position() {
        let p = parse_smod("ring n=1\nrowdegs=[0] coldegs=[1,1]\nentry 0 0 : x0\nentry 0 1 : x1\n").unwrap();
        let m = SlicedModule::slice(&p, 0, 0).unwrap();
        let c = bgg_r(&m).unwrap();
        assert_eq!(c.ranks(), vec![1]);
        assert!(c.maps().is_empty());
    }

    #[test]
    fn polynomial_ring_on_the_line() {
        let m = free_s(1, 2);
        let c = bgg_r(&m).unwrap();
        assert_eq!(c.ranks(), vec![1, 2, 3]);
        // 1 |-> x0 (x) e0 - x1 (x) e1.
        let d0 = c.map(0);
        assert_eq!(d0.entry(0, 0).to_text(&FieldContext::default()), "e0");
        assert_eq!(d0.entry(1, 0).to_text(&FieldContext::default()), "-e1");
        assert!(c.maps().iter().all(is_linear));
        assert_eq!(bgg_l_read(&c).unwrap(), m);
        let plain = bgg_r_with(&m, BggSigns::Plain).unwrap();
        assert_eq!(bgg_l_read_with(&plain, BggSigns::Plain).unwrap(), m);
    }

    #[test]
    fn square_zero_failure_is_reported() {
        let ctx = AlgebraContext::with_prime(1, 101).unwrap();
        let (a, b, c) =
            (FreeEModule::new(&ctx, vec![0]), FreeEModule::new(&ctx, vec![1]), FreeEModule::new(&ctx, vec![2]));
        let e0 = ExtElement::var(0);
        let e1 = ExtElement::var(1);
        let f = GradedMap::new(a.clone(), b.clone(), vec![vec![e0]]).unwrap();
        let g = GradedMap::new(b.clone(), c.clone(), vec![vec![e1]]).unwrap();
        assert_eq!(LinearComplex::new(0, vec![a, b, c], vec![f, g]), Err(Error::NotAComplex { position: 0 }));
    }

    #[test]
    fn linearity_test() {
        let src = "ealg n=2\nrowdegs=[1,0] coldegs=[0,-1]\nentry 0 0 : e0\nentry 0 1 : e1*e2\nentry 1 1 : e2\n";
        let f = parse_emat(src).unwrap();
        assert!(!is_linear(&f));
        let ctx = f.ctx().clone();
        assert!(is_linear(&GradedMap::zero(FreeEModule::new(&ctx, vec![0]), FreeEModule::new(&ctx, vec![0]))));
    }

    #[test]
    fn cubic_complex_is_exact_past_regularity() {
        let m = cubic(6);
        let c = bgg_r(&m).unwrap();
        for i in 3..6 {
            assert_eq!(c.exactness_defect(i).unwrap(), 0, "position {i}");
        }
        // The cubic relation shows up as homology at position 2.
        assert!(c.exactness_defect(2).unwrap() > 0);
        assert!(matches!(c.exactness_defect(6), Err(Error::OutOfWindow { .. })));
    }

    #[test]
    fn zero_differentials_have_full_defect() {
        let ctx = AlgebraContext::with_prime(1, 101).unwrap();
        let mods: Vec<FreeEModule> = (0..3).map(|i| FreeEModule::new(&ctx, vec![i])).collect();
        let maps = vec![GradedMap::zero(mods[0].clone(), mods[1].clone()), GradedMap::zero(mods[1].clone(), mods[2].clone())];
        let c = LinearComplex::new(0, mods, maps).unwrap();
        assert_eq!(c.exactness_defect(1).unwrap(), 4);
    }
}
