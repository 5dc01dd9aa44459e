use std::collections::HashMap;

use crate::efree::VectorizedModule;
use crate::linalg::Matrix;
use crate::smod::exponent_vectors;

/// The complex `D_{i+1} ⊗ M_{s+1} -> D_i ⊗ M_s -> D_{i-1} ⊗ M_{s-1}` whose
/// homology at `D_i ⊗ M_{i+j}` is `Tor_i^E(M, k)_j`. `D_i` is the i-th
/// divided power of the span of the dual variables, with basis the exponent
/// vectors of total degree `i`; the differential is
/// `w^(a) ⊗ x -> sum_{k : a_k > 0} w^(a - e_k) ⊗ e_k x`, which needs no
/// multiplicities and so works in every characteristic.
pub struct CartanComplex<'a> {
    m: &'a VectorizedModule,
    bases: HashMap<usize, (Vec<Vec<u8>>, HashMap<Vec<u8>, usize>)>,
    ranks: HashMap<(usize, i32), usize>,
}

impl<'a> CartanComplex<'a> {
    pub fn new(m: &'a VectorizedModule) -> Self {
        CartanComplex { m, bases: HashMap::new(), ranks: HashMap::new() }
    }

    fn basis(&mut self, i: usize) -> &(Vec<Vec<u8>>, HashMap<Vec<u8>, usize>) {
        let vars = self.m.ctx().vars();
        self.bases.entry(i).or_insert_with(|| {
            let v = exponent_vectors(vars, i);
            let idx = v.iter().enumerate().map(|(k, a)| (a.clone(), k)).collect();
            (v, idx)
        })
    }

    fn chain_dim(&mut self, i: usize, s: i32) -> usize {
        let ds = self.m.dim(s);
        if ds == 0 {
            return 0;
        }
        self.basis(i).0.len() * ds
    }

    /// Matrix of the differential out of `D_i ⊗ M_s`, `i >= 1`.
    pub fn differential(&mut self, i: usize, s: i32) -> Matrix {
        let m = self.m;
        let (ds, dt) = (m.dim(s), m.dim(s - 1));
        self.basis(i - 1);
        let src = self.basis(i).0.clone();
        let tgt_idx = &self.bases[&(i - 1)].1;
        let tgt_len = self.bases[&(i - 1)].0.len();
        let mut out = Matrix::zeros(src.len() * ds, tgt_len * dt);
        if ds == 0 || dt == 0 {
            return out;
        }
        let actions: Vec<Matrix> = (0..m.ctx().vars()).map(|k| m.action(k, s)).collect();
        for (ai, a) in src.iter().enumerate() {
            let mut b = a.clone();
            for (k, act) in actions.iter().enumerate() {
                if a[k] == 0 {
                    continue;
                }
                b[k] -= 1;
                let bi = tgt_idx[&b];
                b[k] += 1;
                for r in 0..ds {
                    for c in 0..dt {
                        out.set(ai * ds + r, bi * dt + c, act.get(r, c));
                    }
                }
            }
        }
        out
    }

    fn rank(&mut self, i: usize, s: i32) -> usize {
        if i == 0 {
            return 0;
        }
        if let Some(&r) = self.ranks.get(&(i, s)) {
            return r;
        }
        let r = if self.m.dim(s) == 0 || self.m.dim(s - 1) == 0 {
            0
        } else {
            let f = *self.m.ctx().field();
            self.differential(i, s).rank(&f)
        };
        self.ranks.insert((i, s), r);
        r
    }

    /// `beta_{i,j}` as the homology dimension at `D_i ⊗ M_{i+j}`.
    pub fn betti(&mut self, i: usize, j: i32) -> usize {
        let s = j + i as i32;
        let dim = self.chain_dim(i, s);
        if dim == 0 {
            return 0;
        }
        dim - self.rank(i, s) - self.rank(i + 1, s + 1)
    }
}

pub fn betti_cartan(m: &VectorizedModule, i: usize, j: i32) -> usize {
    CartanComplex::new(m).betti(i, j)
}
