//! Matrices of type `(b, b')`: the free modules `F = ⊕ E(i)^{b_i}` and
//! `F' = ⊕ E(i-1)^{b'_i}`, homogeneous maps `F -> F'` without unit entries,
//! and the sheaves they encode when `coker phi^dual` has regularity zero.

mod census;

pub use census::{census, census_exhaustive, CensusParams, CensusReport};

use rand::Rng;
use serde::Serialize;

use crate::efree::{FreeEModule, GradedMap};
use crate::eres::{CartanComplex, Regularity, RegularityOptions};
use crate::error::{Error, Result};
use crate::extalg::{AlgebraContext, ExtElement};
use crate::tate::{coker_dual_regularity, tate_from_point, CohomologyTable, TateWindow};

/// The columns `b = gamma^0` and `b' = gamma^1` of a cohomology table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TypeVectors {
    b: Vec<usize>,
    bprime: Vec<usize>,
}

impl TypeVectors {
    pub fn new(mut b: Vec<usize>, mut bprime: Vec<usize>) -> Result<Self> {
        while b.last() == Some(&0) {
            b.pop();
        }
        while bprime.last() == Some(&0) {
            bprime.pop();
        }
        if b.is_empty() && bprime.is_empty() {
            return Err(Error::Invalid("b and b' are both zero".into()));
        }
        Ok(TypeVectors { b, bprime })
    }

    pub fn b(&self) -> &[usize] {
        &self.b
    }

    pub fn bprime(&self) -> &[usize] {
        &self.bprime
    }

    /// Largest index with `b_s` or `b'_s` nonzero.
    pub fn s(&self) -> usize {
        self.b.len().max(self.bprime.len()) - 1
    }

    /// Generator degrees of `F` and `F'`.
    pub fn generator_degrees(&self) -> (Vec<i32>, Vec<i32>) {
        let expand = |v: &[usize], shift: i32| -> Vec<i32> {
            v.iter().enumerate().flat_map(|(i, &c)| std::iter::repeat_n(shift - i as i32, c)).collect()
        };
        (expand(&self.b, 0), expand(&self.bprime, 1))
    }

    pub fn free_modules(&self, ctx: &AlgebraContext) -> (FreeEModule, FreeEModule) {
        let (src, tgt) = self.generator_degrees();
        (FreeEModule::new(ctx, src), FreeEModule::new(ctx, tgt))
    }
}

/// `d[m - 1]` = number of slots of degree `-m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeSequence(pub Vec<usize>);

/// Slots from the `E(i)` block to the `E(j-1)` block have degree `j - i - 1`;
/// those of degree `>= 0` are forced to zero.
pub fn degree_sequence(t: &TypeVectors) -> DegreeSequence {
    let mut d: Vec<usize> = Vec::new();
    for (i, &bi) in t.b.iter().enumerate() {
        for (j, &bj) in t.bprime.iter().enumerate() {
            let deg = j as i32 - i as i32 - 1;
            if deg < 0 && bi * bj > 0 {
                let m = (-deg) as usize;
                if d.len() < m {
                    d.resize(m, 0);
                }
                d[m - 1] += bi * bj;
            }
        }
    }
    DegreeSequence(d)
}

/// A sampled matrix together with the stream it came from.
#[derive(Clone, Debug)]
pub struct MatrixPoint {
    pub phi: GradedMap,
    pub seed: Option<(u64, u64)>,
}

/// Fills every allowed slot with a uniformly random element of its degree.
pub fn sample<R: Rng + ?Sized>(t: &TypeVectors, ctx: &AlgebraContext, rng: &mut R) -> Result<GradedMap> {
    let (src, tgt) = t.free_modules(ctx);
    let vars = ctx.vars() as i32;
    let entries = tgt
        .degrees()
        .iter()
        .map(|&r| {
            src.degrees()
                .iter()
                .map(|&c| {
                    let deg = c - r;
                    if deg >= 0 || deg < -vars {
                        Ok(ExtElement::zero(deg))
                    } else {
                        ctx.random_element(deg, rng)
                    }
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    GradedMap::new(src, tgt, entries)
}

/// Membership in `X^0`: `coker phi^dual` has regularity zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Membership {
    pub member: bool,
    pub certified: bool,
    pub regularity: i32,
}

pub fn membership_x0(phi: &GradedMap, opts: RegularityOptions) -> Result<Membership> {
    let r: Regularity = coker_dual_regularity(phi, opts)?;
    // A top row below zero is final, since rows never rise. A member needs a
    // resolution that is eventually linear in row zero, so a row-zero strand
    // above lower rows stays undecided.
    let certified = r.certified || r.below_floor;
    Ok(Membership { member: r.certified && r.value == 0 && !r.below_floor, certified, regularity: r.value })
}

/// The cohomology table of the sheaf encoded by a member of `X^0`, checked
/// against its type: columns 0 and 1 must be `b` and `b'`.
pub fn reconstruct(t: &TypeVectors, phi: &GradedMap, lo: i32, hi: i32, opts: RegularityOptions) -> Result<(TateWindow, CohomologyTable)> {
    if lo > 0 || hi < 1 {
        return Err(Error::Invalid(format!("window [{lo}, {hi}] must contain columns 0 and 1")));
    }
    let w = tate_from_point(phi, lo, hi, opts)?;
    let table = w.cohomology_table();
    let pad = |v: &[usize]| {
        let mut v = v.to_vec();
        v.resize(table.n + 1, 0);
        v
    };
    let (found_b, found_bprime) = (table.column(0).to_vec(), table.column(1).to_vec());
    if found_b != pad(&t.b) || found_bprime != pad(&t.bprime) {
        return Err(Error::TypeMismatch { b: t.b.clone(), bprime: t.bprime.clone(), found_b, found_bprime });
    }
    Ok((w, table))
}

/// Whether `beta_{i,j}(coker phi^dual)` is nonzero for some `j > -i`. Rows of
/// that table never exceed `s`, which bounds the scan.
pub fn z_membership(t: &TypeVectors, phi: &GradedMap, i: usize) -> bool {
    z_profile(t, phi, i..=i)[0]
}

/// [`z_membership`] for each `i` in `range`, sharing one Cartan complex.
pub fn z_profile(t: &TypeVectors, phi: &GradedMap, range: std::ops::RangeInclusive<usize>) -> Vec<bool> {
    let m = phi.dual().vectorize_coker();
    let mut cartan = CartanComplex::new(&m);
    range
        .map(|i| {
            let i = i as i32;
            (1 - i..=t.s() as i32 - i).any(|j| cartan.betti(i as usize, j) > 0)
        })
        .collect()
}

/// Castelnuovo–Mumford regularity visible in a table: one past the last
/// column carrying higher cohomology. `None` if there is none.
pub fn sheaf_regularity(table: &CohomologyTable) -> Option<i32> {
    table.records().iter().filter(|r| r.i >= 1).map(|r| r.column + 1).max()
}
