//! Minimal free resolutions over E, Betti tables, regularity and the
//! alternating invariants `alpha_k`.

mod betti;
mod cartan;
mod cone;

pub use betti::BettiTable;
pub use cartan::{betti_cartan, CartanComplex};
pub use cone::cone_extend;

use std::collections::BTreeMap;

use crate::efree::{FreeEModule, GradedMap, VectorizedModule};
use crate::error::{Error, Result};
use crate::extalg::{binomial, ExtMonomial};
use crate::linalg::{Matrix, Subspace};

/// Minimal cover of the kernel of a slice-wise linear map out of a free
/// module. `map_slice(d)` is the matrix of the map on slice `d` (rows indexed
/// by the basis of `source` in degree `d`).
///
/// Working from the top degree down, the submodule generated by the
/// generators found so far is echelonized; the new generators in degree `d`
/// are the kernel of the map restricted to the non-pivot coordinates, which
/// is a complement of that submodule inside the kernel.
fn cover_kernel(source: &FreeEModule, mut map_slice: impl FnMut(i32) -> Matrix) -> GradedMap {
    let f = *source.ctx().field();
    let Some((lo, hi)) = source.support() else {
        return GradedMap::zero(FreeEModule::zero(source.ctx()), source.clone());
    };
    let mut cols: Vec<(i32, Vec<_>)> = Vec::new();
    for d in (lo..=hi).rev() {
        let dim = source.slice_dim(d);
        let span = if cols.is_empty() {
            Subspace::new(dim)
        } else {
            let partial = GradedMap::from_columns(source.clone(), cols.clone()).expect("kernel columns are homogeneous");
            Subspace::row_space(&partial.slice_matrix(d), &f)
        };
        let free = span.free_columns();
        if free.is_empty() {
            continue;
        }
        let m = map_slice(d);
        let mut restricted = Matrix::zeros(free.len(), m.cols());
        for (k, &j) in free.iter().enumerate() {
            restricted.row_mut(k).copy_from_slice(m.row(j));
        }
        let ker = restricted.left_kernel(&f);
        for r in 0..ker.rows() {
            let mut v = vec![0u32; dim];
            for (k, &j) in free.iter().enumerate() {
                v[j] = ker.get(r, k);
            }
            cols.push((d, source.vector_to_elements(d, &v)));
        }
    }
    GradedMap::from_columns(source.clone(), cols).expect("kernel columns are homogeneous")
}

/// Minimal generators of `ker f`, as a map onto the source of `f`.
pub fn syzygies(f: &GradedMap) -> GradedMap {
    cover_kernel(f.source(), |d| f.slice_matrix(d))
}

/// Minimal generators of a module: for each degree a complement of the
/// image of the variables, returned as (degree, coordinate vector) pairs.
pub fn minimal_generators(m: &VectorizedModule) -> Vec<(i32, Vec<u32>)> {
    let f = *m.ctx().field();
    let mut gens = Vec::new();
    if m.is_zero() {
        return gens;
    }
    for d in (m.lo()..=m.hi()).rev() {
        let mut span = Subspace::new(m.dim(d));
        for i in 0..m.ctx().vars() {
            let a = m.action(i, d + 1);
            for r in 0..a.rows() {
                span.insert(a.row(r), &f);
            }
        }
        for j in span.free_columns() {
            let mut v = vec![0u32; m.dim(d)];
            v[j] = 1;
            gens.push((d, v));
        }
    }
    gens
}

/// A minimal free resolution computed step by step:
/// `maps[i]: F_{i+1} -> F_i`.
#[derive(Clone, Debug)]
pub struct ResolutionWindow {
    f0: FreeEModule,
    maps: Vec<GradedMap>,
}

impl ResolutionWindow {
    /// Resolution of a vectorized module, starting from a minimal cover.
    pub fn of_module(m: &VectorizedModule) -> Self {
        let gens = minimal_generators(m);
        let f0 = FreeEModule::new(m.ctx(), gens.iter().map(|g| g.0).collect());
        let f1 = cover_kernel(&f0, |d| {
            let basis = f0.slice_basis(d);
            let mut mat = Matrix::zeros(basis.len(), m.dim(d));
            for (row, &(c, mu)) in basis.iter().enumerate() {
                let (g, v) = &gens[c];
                let w = m.act_monomial(ExtMonomial(mu), *g, v);
                mat.row_mut(row).copy_from_slice(&w);
            }
            mat
        });
        ResolutionWindow { f0, maps: vec![f1] }
    }

    /// Resolution of `coker f`. A minimal `f` is used directly as the first
    /// step after pruning redundant columns; otherwise the cokernel is
    /// vectorized first.
    pub fn of_coker(f: &GradedMap) -> Self {
        if f.is_minimal() {
            let step = f.select_columns(&f.minimal_image_columns());
            ResolutionWindow { f0: f.target().clone(), maps: vec![step] }
        } else {
            Self::of_module(&f.vectorize_coker())
        }
    }

    /// Number of free modules currently known (F_0..F_len-1 plus the source
    /// of the last map).
    pub fn len(&self) -> usize {
        self.maps.len() + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn free(&self, i: usize) -> &FreeEModule {
        if i == 0 {
            &self.f0
        } else {
            self.maps[i - 1].source()
        }
    }

    pub fn map(&self, i: usize) -> &GradedMap {
        &self.maps[i]
    }

    pub fn maps(&self) -> &[GradedMap] {
        &self.maps
    }

    /// True once some F_i is zero.
    pub fn terminated(&self) -> bool {
        self.free(self.len() - 1).is_zero()
    }

    /// Computes one more step; no-op once terminated.
    pub fn extend(&mut self) {
        if self.terminated() {
            return;
        }
        let next = syzygies(self.maps.last().unwrap());
        self.maps.push(next);
    }

    pub fn extend_to(&mut self, len: usize) {
        while self.len() < len && !self.terminated() {
            self.extend();
        }
    }

    /// Largest slice the next [`Self::extend`] works on.
    pub fn next_slice_size(&self) -> usize {
        let last = self.free(self.len() - 1);
        let vars = last.ctx().vars();
        last.rank() * binomial(vars, vars / 2)
    }

    pub fn betti(&self) -> BettiTable {
        let mut t = BettiTable::default();
        for i in 0..self.len() {
            for &g in self.free(i).degrees() {
                t.add(i, g, 1);
            }
        }
        t
    }

    /// `i + max generator degree of F_i`, the top Betti row at step `i`.
    pub fn top_row(&self, i: usize) -> Option<i32> {
        self.free(i).max_degree().map(|g| g + i as i32)
    }

    /// `i + min generator degree of F_i`, the lowest Betti row at step `i`.
    pub fn bottom_row(&self, i: usize) -> Option<i32> {
        self.free(i).min_degree().map(|g| g + i as i32)
    }
}

pub fn minimal_free_resolution(m: &VectorizedModule, i_max: usize) -> ResolutionWindow {
    let mut r = ResolutionWindow::of_module(m);
    r.extend_to(i_max + 1);
    r
}

pub fn betti_table(r: &ResolutionWindow) -> BettiTable {
    r.betti()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RegularityOptions {
    /// Consecutive linear steps on an unchanged row needed to certify;
    /// `None` means `n + 2`.
    pub window: Option<usize>,
    /// Hard cap on resolution steps.
    pub max_steps: usize,
    /// Stop (uncertified) before any step whose slices exceed this dimension.
    pub max_slice: usize,
    /// Stop as soon as the top row falls below this value; the top row only
    /// decreases, so the answer is then known to be smaller.
    pub stop_below: Option<i32>,
}

impl Default for RegularityOptions {
    fn default() -> Self {
        RegularityOptions { window: None, max_steps: 64, max_slice: 4000, stop_below: None }
    }
}

/// Regularity of an E-module: the row that the top of the Betti table
/// settles on.
///
/// With entries of degree at most -1, the top row `i + max deg F_i` never
/// increases with `i`. The resolution is eventually linear, so the top row
/// settles on the single row that carries everything, and that row is the
/// regularity. It is certified once `F_i` has been generated in that one
/// row for the stabilization window, or when the resolution ends. A strand
/// above lower rows is not enough: it must eventually die out.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Regularity {
    pub value: i32,
    pub certified: bool,
    /// Set when the computation stopped because the top row dropped below
    /// `stop_below`; `value` is then only an upper bound.
    pub below_floor: bool,
    pub steps: usize,
}

pub fn regularity_of_resolution(mut res: ResolutionWindow, opts: RegularityOptions) -> Result<Regularity> {
    let vars = res.free(0).ctx().vars();
    let window = opts.window.unwrap_or(vars + 1).max(1);
    let Some(mut row) = res.top_row(0) else {
        return Err(Error::ZeroModule("regularity of the zero module".into()));
    };
    let mut run = 0;
    let mut i = 0;
    loop {
        if let Some(floor) = opts.stop_below {
            if row < floor {
                return Ok(Regularity { value: row, certified: true, below_floor: true, steps: i });
            }
        }
        if run >= window {
            return Ok(Regularity { value: row, certified: true, below_floor: false, steps: i });
        }
        if i + 1 >= opts.max_steps || (res.len() <= i + 1 && res.next_slice_size() > opts.max_slice) {
            return Ok(Regularity { value: row, certified: false, below_floor: false, steps: i });
        }
        res.extend_to(i + 2);
        i += 1;
        let Some(r) = res.top_row(i) else {
            return Ok(Regularity { value: row, certified: true, below_floor: false, steps: i });
        };
        debug_assert!(r <= row, "top row increased");
        let linear = res.bottom_row(i) == Some(r);
        run = if r == row && linear { run + 1 } else { 0 };
        row = r;
    }
}

pub fn regularity_e(m: &VectorizedModule, opts: RegularityOptions) -> Result<Regularity> {
    if m.is_zero() {
        return Err(Error::ZeroModule("regularity of the zero module".into()));
    }
    regularity_of_resolution(ResolutionWindow::of_module(m), opts)
}

/// Regularity of `coker f`.
pub fn regularity_of_coker(f: &GradedMap, opts: RegularityOptions) -> Result<Regularity> {
    regularity_of_resolution(ResolutionWindow::of_coker(f), opts)
}

/// Nonzero `alpha_k = sum_i (-1)^i beta_{i,k}` for all `k >= k_min`.
///
/// `beta_{i,k}` vanishes unless `lo(m) - i <= k <= hi(m) - i`, so each sum is
/// finite. The Betti numbers come from the Cartan complex, whose chain spaces
/// are far smaller than the free modules of a resolution.
pub fn alphas_from(m: &VectorizedModule, k_min: i32) -> BTreeMap<i32, i64> {
    let mut out = BTreeMap::new();
    if m.is_zero() {
        return out;
    }
    let mut cartan = CartanComplex::new(m);
    for k in k_min..=m.hi() {
        let a: i64 = (0..=(m.hi() - k) as usize)
            .map(|i| {
                let b = cartan.betti(i, k) as i64;
                if i % 2 == 0 {
                    b
                } else {
                    -b
                }
            })
            .sum();
        if a != 0 {
            out.insert(k, a);
        }
    }
    out
}

/// `alpha_k` for `k >= lo(m)`, the range entering the Hilbert identity.
pub fn alphas(m: &VectorizedModule) -> BTreeMap<i32, i64> {
    alphas_from(m, m.lo())
}

pub fn alpha(m: &VectorizedModule, k: i32) -> i64 {
    alphas_from(m, k).get(&k).copied().unwrap_or(0)
}

/// `sum_{j >= e} alpha_j C(n+1, j-e)`, which equals `dim m_e`.
pub fn alpha_hilbert_rhs(m: &VectorizedModule, e: i32) -> i64 {
    let vars = m.ctx().vars();
    alphas_from(m, e)
        .iter()
        .filter(|(&j, _)| ((j - e) as usize) <= vars)
        .map(|(&j, &a)| a * binomial(vars, (j - e) as usize) as i64)
        .sum()
}
