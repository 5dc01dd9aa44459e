use crate::efree::VectorizedModule;
use crate::extalg::AlgebraContext;
use crate::linalg::Matrix;

/// `M ⊗ ∧⟨ε⟩` over the exterior algebra with one more variable `ε = e_{n+1}`.
///
/// Slice `d` is `M_d ⊗ 1 ⊕ M_{d+1} ⊗ ε`. The old variables act diagonally and
/// `ε (x ⊗ 1) = (-1)^d x ⊗ ε` for `x` in `M_d`, which makes `ε`
/// anticommute with every `e_i`.
pub fn cone_extend(m: &VectorizedModule) -> VectorizedModule {
    let old = m.ctx();
    let ctx = AlgebraContext::new(old.n() + 1, *old.field()).expect("one more variable");
    if m.is_zero() {
        return VectorizedModule::zero(&ctx);
    }
    let f = *old.field();
    let (lo, hi) = (m.lo() - 1, m.hi());
    let dims: Vec<usize> = (lo..=hi).map(|d| m.dim(d) + m.dim(d + 1)).collect();
    let mut actions = Vec::with_capacity(ctx.vars());
    for i in 0..ctx.vars() {
        let mut fam = Vec::new();
        for d in lo..=hi {
            let (a, b) = (m.dim(d), m.dim(d + 1));
            let (a1, b1) = (m.dim(d - 1), m.dim(d));
            let below = if d > lo { a1 + b1 } else { 0 };
            let mut mat = Matrix::zeros(a + b, below);
            if d > lo {
                if i < old.vars() {
                    let x = m.action(i, d);
                    let y = m.action(i, d + 1);
                    for r in 0..a {
                        for c in 0..a1 {
                            mat.set(r, c, x.get(r, c));
                        }
                    }
                    for r in 0..b {
                        for c in 0..b1 {
                            mat.set(a + r, a1 + c, y.get(r, c));
                        }
                    }
                } else {
                    let s = f.sign(d.rem_euclid(2) == 1);
                    for r in 0..a {
                        mat.set(r, a1 + r, s);
                    }
                }
            }
            fam.push(mat);
        }
        actions.push(fam);
    }
    VectorizedModule::new(&ctx, lo, dims, actions).expect("cone slices")
}
