use crate::error::{Error, Result};
use crate::extalg::{AlgebraContext, ExtMonomial};
use crate::linalg::Matrix;

use super::{FreeEModule, GradedMap};

/// A finite graded E-module as explicit data: the dimension of each slice and,
/// for every variable `e_i` and degree `d`, the matrix of `e_i: M_d -> M_{d-1}`
/// in the row convention.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorizedModule {
    ctx: AlgebraContext,
    lo: i32,
    dims: Vec<usize>,
    // actions[i][d - lo]
    actions: Vec<Vec<Matrix>>,
}

impl VectorizedModule {
    pub fn new(ctx: &AlgebraContext, lo: i32, dims: Vec<usize>, actions: Vec<Vec<Matrix>>) -> Result<Self> {
        if actions.len() != ctx.vars() {
            return Err(Error::Invalid(format!("expected {} action families", ctx.vars())));
        }
        for fam in &actions {
            if fam.len() != dims.len() {
                return Err(Error::Invalid("one action matrix per slice is required".into()));
            }
            for (k, a) in fam.iter().enumerate() {
                let below = if k > 0 { dims[k - 1] } else { 0 };
                if a.rows() != dims[k] || a.cols() != below {
                    return Err(Error::Invalid(format!(
                        "action from degree {} has shape {}x{}, expected {}x{}",
                        lo + k as i32,
                        a.rows(),
                        a.cols(),
                        dims[k],
                        below
                    )));
                }
            }
        }
        let mut m = VectorizedModule { ctx: ctx.clone(), lo, dims, actions };
        m.trim();
        Ok(m)
    }

    pub fn zero(ctx: &AlgebraContext) -> Self {
        VectorizedModule { ctx: ctx.clone(), lo: 0, dims: Vec::new(), actions: vec![Vec::new(); ctx.vars()] }
    }

    /// The free module itself as a vectorized module.
    pub fn free(module: &FreeEModule) -> Self {
        GradedMap::zero(FreeEModule::zero(module.ctx()), module.clone()).vectorize_coker()
    }

    fn trim(&mut self) {
        let Some(first) = self.dims.iter().position(|&d| d > 0) else {
            self.lo = 0;
            self.dims.clear();
            self.actions.iter_mut().for_each(|f| f.clear());
            return;
        };
        let last = self.dims.iter().rposition(|&d| d > 0).unwrap();
        self.dims = self.dims[first..=last].to_vec();
        for fam in &mut self.actions {
            *fam = fam[first..=last].to_vec();
        }
        self.lo += first as i32;
    }

    pub fn ctx(&self) -> &AlgebraContext {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.dims.is_empty()
    }

    /// Lowest nonzero degree.
    pub fn lo(&self) -> i32 {
        self.lo
    }

    /// Highest nonzero degree.
    pub fn hi(&self) -> i32 {
        self.lo + self.dims.len() as i32 - 1
    }

    pub fn dim(&self, d: i32) -> usize {
        if d < self.lo || d > self.hi() {
            0
        } else {
            self.dims[(d - self.lo) as usize]
        }
    }

    pub fn dims_between(&self, lo: i32, hi: i32) -> Vec<usize> {
        (lo..=hi).map(|d| self.dim(d)).collect()
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    /// Matrix of `e_i` from slice `d` (shape `dim(d) x dim(d-1)`).
    pub fn action(&self, i: usize, d: i32) -> Matrix {
        if d < self.lo || d > self.hi() {
            return Matrix::zeros(self.dim(d), self.dim(d - 1));
        }
        self.actions[i][(d - self.lo) as usize].clone()
    }

    /// `e_i * v` for `v` in slice `d`.
    pub fn act(&self, i: usize, d: i32, v: &[u32]) -> Vec<u32> {
        if d <= self.lo || d > self.hi() {
            return vec![0; self.dim(d - 1)];
        }
        self.actions[i][(d - self.lo) as usize].apply(v, self.ctx.field())
    }

    /// `mu * v` for `v` in slice `d`.
    pub fn act_monomial(&self, mu: ExtMonomial, d: i32, v: &[u32]) -> Vec<u32> {
        let idx: Vec<usize> = mu.indices().collect();
        let mut w = v.to_vec();
        let mut deg = d;
        for &i in idx.iter().rev() {
            w = self.act(i, deg, &w);
            deg -= 1;
        }
        w
    }

    /// Checks `e_i^2 = 0` and `e_i e_j = -e_j e_i` on every slice.
    pub fn check_relations(&self) -> Result<()> {
        let f = self.ctx.field();
        for d in self.lo..=self.hi() {
            if self.dim(d - 2) == 0 || self.dim(d) == 0 {
                continue;
            }
            for i in 0..self.ctx.vars() {
                for j in i..self.ctx.vars() {
                    let ij = self.action(j, d).mul(&self.action(i, d - 1), f);
                    let ji = self.action(i, d).mul(&self.action(j, d - 1), f);
                    for r in 0..ij.rows() {
                        for c in 0..ij.cols() {
                            if f.add(ij.get(r, c), ji.get(r, c)) != 0 {
                                return Err(Error::Invalid(format!(
                                    "e{i} and e{j} do not anticommute on degree {d}"
                                )));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// The twist `M(a)`, with `M(a)_d = M_{a+d}`.
    pub fn twist(&self, a: i32) -> Self {
        let mut m = self.clone();
        m.lo -= a;
        m
    }

    /// Graded dimension vector over `[lo, hi]`.
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }
}
