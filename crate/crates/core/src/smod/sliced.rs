use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};

use super::poly::PolyRing;
use super::pres::SPresentation;

/// A graded S-module known on the degree window `[lo, hi]` and zero below
/// `lo`: the slice dimensions and, for every variable `x_k` and `lo <= d < hi`,
/// the matrix of `x_k: M_d -> M_{d+1}` in the row convention.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlicedModule {
    ring: PolyRing,
    lo: i32,
    dims: Vec<usize>,
    // mult[d - lo][k]
    mult: Vec<Vec<Matrix>>,
}

impl SlicedModule {
    pub fn new(ring: PolyRing, lo: i32, dims: Vec<usize>, mult: Vec<Vec<Matrix>>) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::Invalid("a sliced module needs at least one slice".into()));
        }
        if mult.len() + 1 != dims.len() {
            return Err(Error::Invalid(format!("expected {} multiplication families", dims.len() - 1)));
        }
        for (k, fam) in mult.iter().enumerate() {
            if fam.len() != ring.vars() {
                return Err(Error::Invalid(format!("expected {} multiplication maps per degree", ring.vars())));
            }
            for a in fam {
                if a.rows() != dims[k] || a.cols() != dims[k + 1] {
                    return Err(Error::Invalid(format!(
                        "multiplication from degree {} has shape {}x{}, expected {}x{}",
                        lo + k as i32,
                        a.rows(),
                        a.cols(),
                        dims[k],
                        dims[k + 1]
                    )));
                }
            }
        }
        let m = SlicedModule { ring, lo, dims, mult };
        m.check_commutative()?;
        Ok(m)
    }

    fn check_commutative(&self) -> Result<()> {
        let f = self.ring.field();
        for k in 0..self.mult.len().saturating_sub(1) {
            for a in 0..self.ring.vars() {
                for b in a + 1..self.ring.vars() {
                    let ab = self.mult[k][a].mul(&self.mult[k + 1][b], f);
                    let ba = self.mult[k][b].mul(&self.mult[k + 1][a], f);
                    if ab != ba {
                        return Err(Error::NotCommutative { a, b, degree: self.lo + k as i32 });
                    }
                }
            }
        }
        Ok(())
    }

    /// Slices `lo..=hi` of the module presented by `pres`, truncated below `lo`.
    pub fn slice(pres: &SPresentation, lo: i32, hi: i32) -> Result<Self> {
        if lo > hi {
            return Err(Error::Invalid(format!("empty window [{lo}, {hi}]")));
        }
        let ring = *pres.ring();
        let f = ring.field();
        let slices: Vec<PresentedSlice> = (lo..=hi).map(|d| PresentedSlice::new(pres, d)).collect();
        let dims = slices.iter().map(|s| s.quotient.len()).collect();
        let mut mult = Vec::new();
        for w in slices.windows(2) {
            let (src, tgt) = (&w[0], &w[1]);
            let fam = (0..ring.vars())
                .map(|k| {
                    let mut m = Matrix::zeros(src.quotient.len(), tgt.quotient.len());
                    for (row, &col) in src.quotient.iter().enumerate() {
                        let (r, ref mono) = src.basis[col];
                        let mut up = mono.clone();
                        up[k] += 1;
                        let mut v = vec![0; tgt.basis.len()];
                        v[tgt.position(r, &up)] = 1;
                        tgt.image.reduce(&mut v, f);
                        for (j, &qc) in tgt.quotient.iter().enumerate() {
                            m.set(row, j, v[qc]);
                        }
                    }
                    m
                })
                .collect();
            mult.push(fam);
        }
        SlicedModule::new(ring, lo, dims, mult)
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn lo(&self) -> i32 {
        self.lo
    }

    pub fn hi(&self) -> i32 {
        self.lo + self.dims.len() as i32 - 1
    }

    /// Dimension of slice `d`; zero below the window, and zero (unknown) above it.
    pub fn dim(&self, d: i32) -> usize {
        if d < self.lo || d > self.hi() {
            0
        } else {
            self.dims[(d - self.lo) as usize]
        }
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn is_zero(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    /// Matrix of `x_k: M_d -> M_{d+1}`, for `d < hi`.
    pub fn mult(&self, k: usize, d: i32) -> Matrix {
        assert!(d < self.hi(), "multiplication out of degree {d} leaves the window");
        if d < self.lo {
            return Matrix::zeros(0, self.dim(d + 1));
        }
        self.mult[(d - self.lo) as usize][k].clone()
    }

    pub fn act(&self, k: usize, d: i32, v: &[u32]) -> Vec<u32> {
        if d < self.lo {
            return vec![0; self.dim(d + 1)];
        }
        self.mult[(d - self.lo) as usize][k].apply(v, self.ring.field())
    }

    /// The truncation `M_{>=k}`, keeping the window top.
    pub fn truncate(&self, k: i32) -> Result<Self> {
        if k <= self.lo {
            return Ok(self.clone());
        }
        if k > self.hi() {
            return Err(Error::OutOfWindow { position: k, lo: self.lo, hi: self.hi() });
        }
        let skip = (k - self.lo) as usize;
        Ok(SlicedModule {
            ring: self.ring,
            lo: k,
            dims: self.dims[skip..].to_vec(),
            mult: self.mult[skip..].to_vec(),
        })
    }

    /// The slices up to degree `hi`.
    pub fn up_to(&self, hi: i32) -> Result<Self> {
        if hi < self.lo || hi > self.hi() {
            return Err(Error::OutOfWindow { position: hi, lo: self.lo, hi: self.hi() });
        }
        let keep = (hi - self.lo) as usize;
        Ok(SlicedModule {
            ring: self.ring,
            lo: self.lo,
            dims: self.dims[..=keep].to_vec(),
            mult: self.mult[..keep].to_vec(),
        })
    }

    /// The same slices over one more variable, which acts by zero.
    pub fn extend_variable(&self) -> Self {
        let ring = PolyRing::new(self.ring.n() + 1, *self.ring.field());
        let mult = self
            .mult
            .iter()
            .enumerate()
            .map(|(k, fam)| {
                let mut fam = fam.clone();
                fam.push(Matrix::zeros(self.dims[k], self.dims[k + 1]));
                fam
            })
            .collect();
        SlicedModule { ring, lo: self.lo, dims: self.dims.clone(), mult }
    }

    /// The twist `M(a)`, with `M(a)_d = M_{a+d}`.
    pub fn twist(&self, a: i32) -> Self {
        let mut m = self.clone();
        m.lo -= a;
        m
    }
}

/// One degree of a presentation: the free slice, the image of the relations,
/// and the non-pivot columns that give a basis of the quotient.
struct PresentedSlice {
    basis: Vec<(usize, Vec<u8>)>,
    offsets: Vec<(usize, super::poly::MonomialBasis)>,
    image: Subspace,
    quotient: Vec<usize>,
}

impl PresentedSlice {
    fn new(pres: &SPresentation, d: i32) -> Self {
        let ring = pres.ring();
        let f = ring.field();
        let mut basis = Vec::new();
        let mut offsets = Vec::new();
        for (r, &g) in pres.rowdegs().iter().enumerate() {
            let mb = ring.basis(d - g);
            offsets.push((basis.len(), mb.clone()));
            basis.extend(mb.monos.iter().map(|m| (r, m.clone())));
        }
        let mut slice = PresentedSlice { basis, offsets, image: Subspace::new(0), quotient: Vec::new() };
        let mut image = Subspace::new(slice.basis.len());
        for (c, &cd) in pres.coldegs().iter().enumerate() {
            for u in ring.basis(d - cd).monos {
                let mut v = vec![0u32; slice.basis.len()];
                for r in 0..pres.rowdegs().len() {
                    for (m, coef) in pres.entry(r, c).terms() {
                        let prod: Vec<u8> = m.iter().zip(&u).map(|(a, b)| a + b).collect();
                        let pos = slice.position(r, &prod);
                        v[pos] = f.add(v[pos], coef);
                    }
                }
                image.insert(&v, f);
            }
        }
        slice.quotient = image.free_columns();
        slice.image = image;
        slice
    }

    fn position(&self, r: usize, mono: &[u8]) -> usize {
        let (off, ref mb) = self.offsets[r];
        off + mb.index(mono)
    }
}
