//! Dense linear algebra over GF(p).
//!
//! Linear maps use the row convention throughout the crate: a map V -> W is
//! a `dim V x dim W` matrix whose row `i` is the image of the i-th basis
//! vector of V. Images are row spaces and kernels are left null spaces.

use crate::extalg::FieldContext;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(cols: usize, rows: &[Vec<u32>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols);
            data.extend_from_slice(r);
        }
        Matrix { rows: rows.len(), cols, data }
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v;
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    #[inline]
    pub fn row_mut(&mut self, r: usize) -> &mut [u32] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    /// `self * other`, i.e. the composite "first self, then other" in the row
    /// convention.
    pub fn mul(&self, other: &Matrix, f: &FieldContext) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            let orow = &mut out.data[i * other.cols..(i + 1) * other.cols];
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                axpy(orow, a, other.row(k), f);
            }
        }
        out
    }

    /// Row vector times matrix.
    pub fn apply(&self, v: &[u32], f: &FieldContext) -> Vec<u32> {
        assert_eq!(v.len(), self.rows);
        let mut out = vec![0u32; self.cols];
        for (k, &a) in v.iter().enumerate() {
            if a != 0 {
                axpy(&mut out, a, self.row(k), f);
            }
        }
        out
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    /// Brings the matrix to row echelon form (pivots normalized to one),
    /// searching for pivots only among the first `pivot_cols` columns.
    /// Returns the pivot columns; rows past their count are zero on those
    /// columns.
    pub fn echelonize_prefix(&mut self, pivot_cols: usize, f: &FieldContext) -> Vec<usize> {
        let cols = self.cols;
        let p = f.p() as u64;
        // Rows accumulate unreduced in u64; a row is reduced when it becomes
        // a pivot row, and single entries are reduced when read as multipliers.
        let mut work: Vec<u64> = self.data.iter().map(|&x| x as u64).collect();
        let mut prow = vec![0u32; cols];
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..pivot_cols.min(cols) {
            if r == self.rows {
                break;
            }
            let mut found = None;
            for i in r..self.rows {
                let x = &mut work[i * cols + c];
                *x %= p;
                if *x != 0 && found.is_none() {
                    found = Some(i);
                }
            }
            let Some(i) = found else { continue };
            if i != r {
                for k in c..cols {
                    work.swap(i * cols + k, r * cols + k);
                }
            }
            let inv = f.inv(work[r * cols + c] as u32);
            for k in c..cols {
                let v = f.mul((work[r * cols + k] % p) as u32, inv);
                work[r * cols + k] = v as u64;
                prow[k] = v;
            }
            let (_, tail) = work.split_at_mut((r + 1) * cols);
            let px = &prow[c..];
            for row in tail.chunks_mut(cols) {
                let a = row[c] % p;
                if a != 0 {
                    let a = p - a;
                    for (y, &x) in row[c..].iter_mut().zip(px) {
                        *y += a * x as u64;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        for (d, w) in self.data.iter_mut().zip(&work) {
            *d = (w % p) as u32;
        }
        pivots
    }

    pub fn echelonize(&mut self, f: &FieldContext) -> Vec<usize> {
        let c = self.cols;
        self.echelonize_prefix(c, f)
    }

    pub fn rank(&self, f: &FieldContext) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        let mut m = if self.rows > self.cols { self.transpose() } else { self.clone() };
        m.echelonize(f).len()
    }

    /// Basis (as rows) of `{ v : v * self = 0 }`.
    pub fn left_kernel(&self, f: &FieldContext) -> Matrix {
        let (m, k) = (self.rows, self.cols);
        let w = k + m;
        let mut aug = Matrix::zeros(m, w);
        for i in 0..m {
            aug.data[i * w..i * w + k].copy_from_slice(self.row(i));
            aug.data[i * w + k + i] = 1;
        }
        let rank = aug.echelonize_prefix(k, f).len();
        let mut ker = Matrix::zeros(m - rank, m);
        for (out, i) in (rank..m).enumerate() {
            ker.row_mut(out).copy_from_slice(&aug.data[i * w + k..(i + 1) * w]);
        }
        ker
    }
}

/// `y += a * x` elementwise.
#[inline]
pub fn axpy(y: &mut [u32], a: u32, x: &[u32], f: &FieldContext) {
    for (yi, &xi) in y.iter_mut().zip(x) {
        *yi = f.mul_add(*yi, a, xi);
    }
}

/// A subspace of `GF(p)^ambient` kept as echelon rows sorted by pivot.
#[derive(Clone, Debug)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn new(ambient: usize) -> Self {
        Subspace { ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        let rows = (0..ambient)
            .map(|i| {
                let mut v = vec![0; ambient];
                v[i] = 1;
                v
            })
            .collect();
        Subspace { ambient, rows, pivots: (0..ambient).collect() }
    }

    /// Span of the rows of `m`.
    pub fn row_space(m: &Matrix, f: &FieldContext) -> Self {
        let mut e = m.clone();
        let pivots = e.echelonize(f);
        let rows = (0..pivots.len()).map(|i| e.row(i).to_vec()).collect();
        Subspace { ambient: m.cols(), rows, pivots }
    }

    pub fn from_vectors<'a>(ambient: usize, vs: impl IntoIterator<Item = &'a [u32]>, f: &FieldContext) -> Self {
        let vs: Vec<&[u32]> = vs.into_iter().collect();
        let mut m = Matrix::zeros(vs.len(), ambient);
        for (i, v) in vs.iter().enumerate() {
            m.row_mut(i).copy_from_slice(v);
        }
        Self::row_space(&m, f)
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` in place; afterwards `v` is zero on every pivot column.
    pub fn reduce(&self, v: &mut [u32], f: &FieldContext) {
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let a = v[pc];
            if a != 0 {
                axpy(&mut v[pc..], f.neg(a), &row[pc..], f);
            }
        }
    }

    pub fn contains(&self, v: &[u32], f: &FieldContext) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w, f);
        w.iter().all(|&x| x == 0)
    }

    /// Coefficients of `v` in the stored basis, or `None` if `v` is not in
    /// the subspace.
    pub fn coordinates(&self, v: &[u32], f: &FieldContext) -> Option<Vec<u32>> {
        let mut w = v.to_vec();
        let mut coords = Vec::with_capacity(self.rows.len());
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let a = w[pc];
            coords.push(a);
            if a != 0 {
                axpy(&mut w[pc..], f.neg(a), &row[pc..], f);
            }
        }
        w.iter().all(|&x| x == 0).then_some(coords)
    }

    /// Adds `v` to the subspace; returns false if it was already contained.
    pub fn insert(&mut self, v: &[u32], f: &FieldContext) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w, f);
        let Some(pc) = w.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = f.inv(w[pc]);
        for x in &mut w[pc..] {
            *x = f.mul(*x, inv);
        }
        let at = self.pivots.partition_point(|&p| p < pc);
        self.pivots.insert(at, pc);
        self.rows.insert(at, w);
        true
    }

    /// Non-pivot columns, a basis of a complement via standard vectors.
    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&c| !is_pivot[c]).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_matrix(rows: usize, cols: usize, p: u32, density: f64, seed: u64) -> Matrix {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut m = Matrix::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                if rng.gen_bool(density) {
                    m.set(r, c, rng.gen_range(0..p));
                }
            }
        }
        m
    }

    #[test]
    fn rank_of_small_examples() {
        let f = FieldContext::new(5).unwrap();
        let m = Matrix::from_rows(3, &[vec![1, 2, 3], vec![0, 1, 4], vec![1, 3, 2]]);
        // row3 = row1 + row2 mod 5
        assert_eq!(m.rank(&f), 2);
        assert_eq!(Matrix::zeros(3, 4).rank(&f), 0);
        assert_eq!(Matrix::identity(4).rank(&f), 4);
    }

    #[test]
    fn kernel_of_dependent_rows() {
        let f = FieldContext::new(5).unwrap();
        let m = Matrix::from_rows(3, &[vec![1, 2, 3], vec![0, 1, 4], vec![1, 3, 2]]);
        let k = m.left_kernel(&f);
        assert_eq!(k.rows(), 1);
        assert!(k.mul(&m, &f).is_zero());
    }

    #[test]
    fn subspace_reduction_gives_canonical_form() {
        let f = FieldContext::new(7).unwrap();
        let mut s = Subspace::new(4);
        assert!(s.insert(&[0, 1, 2, 0], &f));
        assert!(s.insert(&[1, 1, 0, 3], &f));
        assert!(!s.insert(&[1, 2, 2, 3], &f));
        assert_eq!(s.dim(), 2);
        assert_eq!(s.pivots(), &[0, 1]);
        let mut v = vec![3, 5, 6, 1];
        s.reduce(&mut v, &f);
        assert_eq!((v[0], v[1]), (0, 0));
        assert_eq!(s.free_columns(), vec![2, 3]);
    }

    proptest! {
        #[test]
        fn rank_nullity(rows in 1usize..30, cols in 1usize..30, seed in any::<u64>(), pi in 0usize..3) {
            let p = [2u32, 101, 32003][pi];
            let f = FieldContext::new(p).unwrap();
            let m = random_matrix(rows, cols, p, 0.3, seed);
            let k = m.left_kernel(&f);
            prop_assert_eq!(k.rows() + m.rank(&f), rows);
            prop_assert!(k.mul(&m, &f).is_zero());
            prop_assert_eq!(k.rank(&f), k.rows());
        }

        #[test]
        fn row_space_contains_rows(rows in 1usize..20, cols in 1usize..20, seed in any::<u64>()) {
            let f = FieldContext::default();
            let m = random_matrix(rows, cols, 32003, 0.5, seed);
            let s = Subspace::row_space(&m, &f);
            prop_assert_eq!(s.dim(), m.rank(&f));
            for r in 0..rows {
                prop_assert!(s.contains(m.row(r), &f));
            }
        }
    }

    #[test]
    fn parallel_path_matches_rank_nullity() {
        let f = FieldContext::default();
        let m = random_matrix(400, 300, 32003, 0.05, 9);
        let k = m.left_kernel(&f);
        assert_eq!(k.rows() + m.rank(&f), 400);
        assert!(k.mul(&m, &f).is_zero());
    }
}

