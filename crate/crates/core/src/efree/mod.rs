//! Graded free E-modules, homogeneous maps between them, and finite graded
//! E-modules given by explicit slices.
//!
//! A free module is a list of generator degrees; the generator of `E(a)`
//! sits in degree `-a`. The slice in degree `d` has basis `(c, mu)` for
//! generators `c` and monomials `mu` with `|mu| = g_c - d`, ordered by
//! generator and then by the canonical monomial order.

mod text;
mod vectorized;

pub use text::{parse_emat, write_emat};
pub use vectorized::VectorizedModule;

use crate::error::{Error, Result};
use crate::extalg::{mono_mul, AlgebraContext, ExtElement, ExtMonomial};
use crate::linalg::{Matrix, Subspace};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeEModule {
    ctx: AlgebraContext,
    degrees: Vec<i32>,
}

impl FreeEModule {
    pub fn new(ctx: &AlgebraContext, degrees: Vec<i32>) -> Self {
        FreeEModule { ctx: ctx.clone(), degrees }
    }

    pub fn zero(ctx: &AlgebraContext) -> Self {
        Self::new(ctx, Vec::new())
    }

    pub fn ctx(&self) -> &AlgebraContext {
        &self.ctx
    }

    pub fn degrees(&self) -> &[i32] {
        &self.degrees
    }

    pub fn rank(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_zero(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn max_degree(&self) -> Option<i32> {
        self.degrees.iter().copied().max()
    }

    pub fn min_degree(&self) -> Option<i32> {
        self.degrees.iter().copied().min()
    }

    /// Degrees with a nonzero slice, as an inclusive range.
    pub fn support(&self) -> Option<(i32, i32)> {
        Some((self.min_degree()? - self.ctx.vars() as i32, self.max_degree()?))
    }

    /// `Hom_E(F, E)`: generator degrees negated.
    pub fn dual(&self) -> FreeEModule {
        FreeEModule::new(&self.ctx, self.degrees.iter().map(|g| -g).collect())
    }

    /// Start offset of each generator's block in slice `d`, and the slice
    /// dimension.
    pub fn layout(&self, d: i32) -> (Vec<Option<usize>>, usize) {
        let mut off = Vec::with_capacity(self.rank());
        let mut total = 0;
        for &g in &self.degrees {
            let k = self.ctx.graded_dim(g, d);
            if k == 0 {
                off.push(None);
            } else {
                off.push(Some(total));
                total += k;
            }
        }
        (off, total)
    }

    pub fn slice_dim(&self, d: i32) -> usize {
        self.degrees.iter().map(|&g| self.ctx.graded_dim(g, d)).sum()
    }

    /// Basis of slice `d` as (generator, monomial mask).
    pub fn slice_basis(&self, d: i32) -> Vec<(usize, u32)> {
        let mut out = Vec::new();
        for (c, &g) in self.degrees.iter().enumerate() {
            if g - d >= 0 {
                for &mu in self.ctx.monomials((g - d) as usize) {
                    out.push((c, mu));
                }
            }
        }
        out
    }

    /// Left multiplication by `e_i`, slice `d` to slice `d - 1`.
    pub fn act_var(&self, i: usize, d: i32, v: &[u32]) -> Vec<u32> {
        let f = self.ctx.field();
        let (off, _) = self.layout(d);
        let (off1, dim1) = self.layout(d - 1);
        let mut out = vec![0u32; dim1];
        let e = ExtMonomial::var(i);
        for (c, &g) in self.degrees.iter().enumerate() {
            let (Some(o), Some(o1)) = (off[c], off1[c]) else { continue };
            for (k, &mu) in self.ctx.monomials((g - d) as usize).iter().enumerate() {
                let a = v[o + k];
                if a == 0 {
                    continue;
                }
                if let Some((neg, m)) = mono_mul(e, ExtMonomial(mu)) {
                    let idx = o1 + self.ctx.mono_rank(m.0);
                    out[idx] = f.add(out[idx], if neg { f.neg(a) } else { a });
                }
            }
        }
        out
    }

    /// The element `sum_c v_c g_c` of slice `d` as one coefficient per
    /// generator.
    pub fn vector_to_elements(&self, d: i32, v: &[u32]) -> Vec<ExtElement> {
        let f = self.ctx.field();
        let (off, _) = self.layout(d);
        self.degrees
            .iter()
            .enumerate()
            .map(|(c, &g)| match off[c] {
                None => ExtElement::zero(d - g),
                Some(o) => {
                    let monos = self.ctx.monomials((g - d) as usize);
                    let terms = monos
                        .iter()
                        .enumerate()
                        .filter(|(k, _)| v[o + k] != 0)
                        .map(|(k, &mu)| (ExtMonomial(mu), v[o + k]));
                    ExtElement::from_terms(f, d - g, terms).expect("monomials of one size")
                }
            })
            .collect()
    }

    /// Inverse of [`Self::vector_to_elements`].
    pub fn elements_to_vector(&self, d: i32, els: &[ExtElement]) -> Vec<u32> {
        let (off, dim) = self.layout(d);
        let mut v = vec![0u32; dim];
        for (c, el) in els.iter().enumerate() {
            if let Some(o) = off[c] {
                for &(m, a) in el.terms() {
                    v[o + self.ctx.mono_rank(m.0)] = a;
                }
            }
        }
        v
    }
}

/// A homogeneous map of graded free E-modules. `entries[r][c]` is the
/// coefficient of target generator `r` in the image of source generator `c`,
/// of degree `source_deg[c] - target_deg[r]`; E acts on the left, so
/// `a g_c` maps to `sum_r (a * entries[r][c]) t_r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedMap {
    source: FreeEModule,
    target: FreeEModule,
    entries: Vec<Vec<ExtElement>>,
}

impl GradedMap {
    pub fn new(source: FreeEModule, target: FreeEModule, entries: Vec<Vec<ExtElement>>) -> Result<Self> {
        if !source.ctx.same(&target.ctx) {
            return Err(Error::ContextMismatch("source and target live over different algebras".into()));
        }
        if entries.len() != target.rank() || entries.iter().any(|row| row.len() != source.rank()) {
            return Err(Error::Invalid(format!(
                "entry matrix must be {} x {}",
                target.rank(),
                source.rank()
            )));
        }
        let mut entries = entries;
        let vars = source.ctx.vars() as i32;
        for (r, row) in entries.iter_mut().enumerate() {
            for (c, el) in row.iter_mut().enumerate() {
                let want = source.degrees[c] - target.degrees[r];
                if el.is_zero() {
                    *el = ExtElement::zero(want);
                    continue;
                }
                if el.degree() != want {
                    return Err(Error::Inhomogeneous { row: r, col: c, expected: want, found: el.degree() });
                }
                if want > 0 || want < -vars {
                    return Err(Error::DegreeOutOfRange { degree: want, top: vars as usize });
                }
                if el.max_var().is_some_and(|v| v > source.ctx.n()) {
                    return Err(Error::ContextMismatch(format!("entry ({r}, {c}) uses a variable beyond e{}", source.ctx.n())));
                }
            }
        }
        Ok(GradedMap { source, target, entries })
    }

    pub fn zero(source: FreeEModule, target: FreeEModule) -> Self {
        let entries = target
            .degrees
            .iter()
            .map(|t| source.degrees.iter().map(|g| ExtElement::zero(g - t)).collect())
            .collect();
        GradedMap { source, target, entries }
    }

    /// Builds a map from its source-generator columns.
    pub fn from_columns(target: FreeEModule, columns: Vec<(i32, Vec<ExtElement>)>) -> Result<Self> {
        let source = FreeEModule::new(&target.ctx, columns.iter().map(|c| c.0).collect());
        let entries = (0..target.rank())
            .map(|r| columns.iter().map(|c| c.1[r].clone()).collect())
            .collect();
        Self::new(source, target, entries)
    }

    pub fn ctx(&self) -> &AlgebraContext {
        &self.source.ctx
    }

    pub fn source(&self) -> &FreeEModule {
        &self.source
    }

    pub fn target(&self) -> &FreeEModule {
        &self.target
    }

    pub fn entry(&self, r: usize, c: usize) -> &ExtElement {
        &self.entries[r][c]
    }

    pub fn entries(&self) -> &[Vec<ExtElement>] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(|e| e.is_zero())
    }

    /// No unit entries.
    pub fn is_minimal(&self) -> bool {
        self.entries.iter().flatten().all(|e| e.is_zero() || e.degree() != 0)
    }

    /// Matrix of the map from source slice `d` to target slice `d`.
    pub fn slice_matrix(&self, d: i32) -> Matrix {
        let ctx = &self.source.ctx;
        let f = ctx.field();
        let (soff, sdim) = self.source.layout(d);
        let (toff, tdim) = self.target.layout(d);
        let mut m = Matrix::zeros(sdim, tdim);
        for (c, &g) in self.source.degrees.iter().enumerate() {
            let Some(so) = soff[c] else { continue };
            let monos = ctx.monomials((g - d) as usize);
            for (r, row) in self.entries.iter().enumerate() {
                let el = &row[c];
                let Some(to) = toff[r] else { continue };
                if el.is_zero() {
                    continue;
                }
                for (k, &mu) in monos.iter().enumerate() {
                    for &(nu, a) in el.terms() {
                        if let Some((neg, prod)) = mono_mul(ExtMonomial(mu), nu) {
                            let col = to + ctx.mono_rank(prod.0);
                            let v = m.get(so + k, col);
                            m.set(so + k, col, if neg { f.sub(v, a) } else { f.add(v, a) });
                        }
                    }
                }
            }
        }
        m
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &GradedMap) -> Result<GradedMap> {
        if self.target != next.source {
            return Err(Error::Invalid("maps are not composable".into()));
        }
        let f = self.ctx().field();
        let entries = next
            .target
            .degrees
            .iter()
            .enumerate()
            .map(|(s, &ts)| {
                (0..self.source.rank())
                    .map(|c| {
                        let mut acc = ExtElement::zero(self.source.degrees[c] - ts);
                        for r in 0..self.target.rank() {
                            let a = &self.entries[r][c];
                            let b = &next.entries[s][r];
                            if !a.is_zero() && !b.is_zero() {
                                acc = acc.add(&a.mul(b, f), f);
                            }
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        GradedMap::new(self.source.clone(), next.target.clone(), entries)
    }

    /// The dual map `Hom_E(target, E) -> Hom_E(source, E)`, written in a
    /// sign convention that is an involution. It differs from the literal
    /// transpose by signs that depend only on degrees, which rescale
    /// generators and so leave images, kernels and cokernels unchanged up to
    /// isomorphism.
    pub fn dual(&self) -> GradedMap {
        let f = self.ctx().field();
        let entries = self
            .source
            .degrees
            .iter()
            .enumerate()
            .map(|(c, &g)| {
                self.target
                    .degrees
                    .iter()
                    .enumerate()
                    .map(|(r, &t)| {
                        let el = &self.entries[r][c];
                        let parity = (el.degree() * t + t.div_euclid(2) + g.div_euclid(2)).rem_euclid(2);
                        if parity == 1 {
                            el.neg(f)
                        } else {
                            el.clone()
                        }
                    })
                    .collect()
            })
            .collect();
        GradedMap { source: self.target.dual(), target: self.source.dual(), entries }
    }

    pub fn select_columns(&self, cols: &[usize]) -> GradedMap {
        let source = FreeEModule::new(self.ctx(), cols.iter().map(|&c| self.source.degrees[c]).collect());
        let entries = self.entries.iter().map(|row| cols.iter().map(|&c| row[c].clone()).collect()).collect();
        GradedMap { source, target: self.target.clone(), entries }
    }

    pub fn select_rows(&self, rows: &[usize]) -> GradedMap {
        let target = FreeEModule::new(self.ctx(), rows.iter().map(|&r| self.target.degrees[r]).collect());
        let entries = rows.iter().map(|&r| self.entries[r].clone()).collect();
        GradedMap { source: self.source.clone(), target, entries }
    }

    /// Source generators whose images form a minimal generating set of the
    /// image: a column is dropped when its image lies in the span of the
    /// E-multiples of all columns plus the columns already kept in its degree.
    pub fn minimal_image_columns(&self) -> Vec<usize> {
        let f = *self.ctx().field();
        let mut order: Vec<usize> = (0..self.source.rank()).collect();
        order.sort_by_key(|&c| std::cmp::Reverse(self.source.degrees[c]));
        let mut keep = Vec::new();
        let mut i = 0;
        while i < order.len() {
            let d = self.source.degrees[order[i]];
            let mut j = i;
            while j < order.len() && self.source.degrees[order[j]] == d {
                j += 1;
            }
            let sm = self.slice_matrix(d);
            let (off, _) = self.source.layout(d);
            let mut span = Subspace::new(sm.cols());
            for (c, &g) in self.source.degrees.iter().enumerate() {
                if g > d {
                    if let Some(o) = off[c] {
                        for k in 0..self.ctx().graded_dim(g, d) {
                            span.insert(sm.row(o + k), &f);
                        }
                    }
                }
            }
            for &c in &order[i..j] {
                let o = off[c].expect("generator slice");
                if span.insert(sm.row(o), &f) {
                    keep.push(c);
                }
            }
            i = j;
        }
        keep.sort_unstable();
        keep
    }

    /// Removes redundant relations of the presentation given by the dual:
    /// rows of `self` (columns of its dual) that are E-combinations of the
    /// others are pruned, so that the dual of the result minimally presents
    /// the same cokernel.
    pub fn minimize_presentation(&self) -> GradedMap {
        let rows = self.dual().minimal_image_columns();
        self.select_rows(&rows)
    }

    /// Graded pieces of `coker(self)`.
    pub fn vectorize_coker(&self) -> VectorizedModule {
        let ctx = self.ctx().clone();
        let Some((lo, hi)) = self.target.support() else {
            return VectorizedModule::zero(&ctx);
        };
        let f = *ctx.field();
        let mut spaces = Vec::new();
        for d in lo..=hi {
            let m = self.slice_matrix(d);
            let s = if m.rows() == 0 { Subspace::new(self.target.slice_dim(d)) } else { Subspace::row_space(&m, &f) };
            spaces.push(s);
        }
        let free: Vec<Vec<usize>> = spaces.iter().map(|s| s.free_columns()).collect();
        let dims = free.iter().map(|q| q.len()).collect();
        let actions = (0..ctx.vars())
            .map(|i| {
                (lo..=hi)
                    .map(|d| {
                        let k = (d - lo) as usize;
                        let below = if d > lo { free[k - 1].len() } else { 0 };
                        let mut a = Matrix::zeros(free[k].len(), below);
                        if d > lo {
                            let ambient = self.target.slice_dim(d);
                            for (row, &q) in free[k].iter().enumerate() {
                                let mut v = vec![0u32; ambient];
                                v[q] = 1;
                                let mut w = self.target.act_var(i, d, &v);
                                spaces[k - 1].reduce(&mut w, &f);
                                for (col, &q1) in free[k - 1].iter().enumerate() {
                                    a.set(row, col, w[q1]);
                                }
                            }
                        }
                        a
                    })
                    .collect()
            })
            .collect();
        VectorizedModule::new(&ctx, lo, dims, actions).expect("cokernel of a homogeneous map")
    }

    /// `ker(self)` as a module, with the basis of each kernel slice (rows,
    /// in source coordinates) recorded for lifting.
    pub fn kernel_module(&self) -> (VectorizedModule, Vec<Matrix>) {
        let ctx = self.ctx().clone();
        let Some((lo, hi)) = self.source.support() else {
            return (VectorizedModule::zero(&ctx), Vec::new());
        };
        let f = *ctx.field();
        let spaces: Vec<Subspace> = (lo..=hi)
            .map(|d| {
                let k = self.slice_matrix(d).left_kernel(&f);
                Subspace::row_space(&k, &f)
            })
            .collect();
        let dims = spaces.iter().map(|s| s.dim()).collect();
        let actions = (0..ctx.vars())
            .map(|i| {
                (lo..=hi)
                    .map(|d| {
                        let k = (d - lo) as usize;
                        let below = if d > lo { spaces[k - 1].dim() } else { 0 };
                        let mut a = Matrix::zeros(spaces[k].dim(), below);
                        if d > lo {
                            for (row, v) in spaces[k].basis().iter().enumerate() {
                                let w = self.source.act_var(i, d, v);
                                let coords = spaces[k - 1].coordinates(&w, &f).expect("kernel is a submodule");
                                a.row_mut(row).copy_from_slice(&coords);
                            }
                        }
                        a
                    })
                    .collect()
            })
            .collect();
        let incl = spaces
            .iter()
            .map(|s| {
                let mut m = Matrix::zeros(s.dim(), s.ambient());
                for (r, v) in s.basis().iter().enumerate() {
                    m.row_mut(r).copy_from_slice(v);
                }
                m
            })
            .collect();
        (VectorizedModule::new(&ctx, lo, dims, actions).expect("kernel of a homogeneous map"), incl)
    }
}
