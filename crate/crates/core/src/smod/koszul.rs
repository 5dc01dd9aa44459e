use crate::eres::BettiTable;
use crate::error::{Error, Result};
use crate::linalg::Matrix;

use super::sliced::SlicedModule;

/// Subsets of `{0..vars}` of size `i` as sorted index lists, in lex order.
fn subsets(vars: usize, i: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, vars: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for s in start..=vars - left {
            cur.push(s);
            rec(s + 1, vars, left - 1, cur, out);
            cur.pop();
        }
    }
    if i <= vars {
        rec(0, vars, i, &mut cur, &mut out);
    }
    out
}

/// Koszul differential `wedge^i V (x) M_e -> wedge^{i-1} V (x) M_{e+1}`,
/// `e_I (x) x |-> sum_t (-1)^t e_{I - i_t} (x) x_{i_t} x`.
fn koszul_differential(m: &SlicedModule, i: usize, e: i32) -> Matrix {
    let vars = m.ring().vars();
    let f = m.ring().field();
    let (ds, dt) = (m.dim(e), m.dim(e + 1));
    if i == 0 || i > vars {
        return Matrix::zeros(subsets(vars, i).len() * ds, 0);
    }
    let (src, tgt) = (subsets(vars, i), subsets(vars, i - 1));
    let mut out = Matrix::zeros(src.len() * ds, tgt.len() * dt);
    if ds == 0 || dt == 0 {
        return out;
    }
    let mults: Vec<Matrix> = (0..vars).map(|k| m.mult(k, e)).collect();
    for (a, set) in src.iter().enumerate() {
        for (t, &k) in set.iter().enumerate() {
            let rest: Vec<usize> = set.iter().copied().filter(|&x| x != k).collect();
            let b = tgt.binary_search(&rest).unwrap();
            let sign = f.sign(t % 2 == 1);
            for x in 0..ds {
                let row = mults[k].row(x);
                for (y, &c) in row.iter().enumerate() {
                    if c != 0 {
                        let (r, col) = (a * ds + x, b * dt + y);
                        out.set(r, col, f.add(out.get(r, col), f.mul(sign, c)));
                    }
                }
            }
        }
    }
    out
}

/// `beta_{i,j}` of `M` (truncated below its window) as Koszul homology at
/// `wedge^i V (x) M_{j-i}`.
pub fn koszul_betti(m: &SlicedModule, i: usize, j: i32) -> Result<usize> {
    let e = j - i as i32;
    if e + 1 > m.hi() {
        return Err(Error::WindowTooSmall {
            what: format!("beta_{{{i},{j}}}"),
            required: e + 1,
            available: m.hi(),
        });
    }
    if i > m.ring().vars() || m.dim(e) == 0 {
        return Ok(0);
    }
    let f = m.ring().field();
    let out = koszul_differential(m, i, e);
    let kernel = out.rows() - out.rank(f);
    let incoming = koszul_differential(m, i + 1, e - 1).rank(f);
    Ok(kernel - incoming)
}

/// All Betti numbers visible in the window: rows `j - i` with `j - i < hi`.
pub fn betti_table_s(m: &SlicedModule) -> BettiTable {
    let mut t = BettiTable::over_s();
    for row in m.lo()..m.hi() {
        for i in 0..=m.ring().vars() {
            let v = koszul_betti(m, i, row + i as i32).expect("row inside the window");
            t.add(i, row + i as i32, v);
        }
    }
    t
}

/// Castelnuovo–Mumford regularity: the top nonzero row of the Betti table.
/// The window must show `n + 1` zero rows above it before the value is trusted.
pub fn regularity_s(m: &SlicedModule) -> Result<i32> {
    let t = betti_table_s(m);
    let reg = t.max_row().ok_or_else(|| Error::ZeroModule("no nonzero slice in the window".into()))?;
    let quiet = m.ring().n() as i32 + 1;
    if m.hi() - 1 < reg + quiet {
        return Err(Error::WindowTooSmall {
            what: format!("regularity (top row {reg} needs {quiet} quiet rows)"),
            required: reg + quiet + 1,
            available: m.hi(),
        });
    }
    Ok(reg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extalg::{binomial, FieldContext};
    use crate::smod::poly::PolyRing;
    use crate::smod::pres::{parse_smod, SPresentation};

    fn ring(n: usize) -> PolyRing {
        PolyRing::new(n, FieldContext::default())
    }

    #[test]
    fn residue_field_is_koszul() {
        for n in 1..4 {
            let src = format!(
                "ring n={n}\nrowdegs=[0] coldegs=[{}]\n{}",
                vec!["1"; n + 1].join(","),
                (0..=n).map(|k| format!("entry 0 {k} : x{k}\n")).collect::<String>()
            );
            let m = SlicedModule::slice(&parse_smod(&src).unwrap(), 0, n as i32 + 3).unwrap();
            for i in 0..=n + 1 {
                assert_eq!(koszul_betti(&m, i, i as i32).unwrap(), binomial(n + 1, i));
            }
            assert_eq!(regularity_s(&m).unwrap(), 0);
        }
    }

    #[test]
    fn plane_cubic() {
        let p = parse_smod("ring n=2\nrowdegs=[0] coldegs=[3]\nentry 0 0 : x0^3 + x1^3 + x2^3\n").unwrap();
        let m = SlicedModule::slice(&p, 0, 7).unwrap();
        let t = betti_table_s(&m);
        assert_eq!(t.get(0, 0), 1);
        assert_eq!(t.get(1, 3), 1);
        assert_eq!(t.total(), 2);
        assert_eq!(regularity_s(&m).unwrap(), 2);
        assert!(matches!(regularity_s(&SlicedModule::slice(&p, 0, 5).unwrap()), Err(Error::WindowTooSmall { .. })));
    }

    #[test]
    fn free_and_truncated() {
        let s = SlicedModule::slice(&SPresentation::free(ring(2), vec![0]), 0, 6).unwrap();
        assert_eq!(regularity_s(&s).unwrap(), 0);
        // S_{>=2} has a linear resolution starting in degree 2.
        let t = s.truncate(2).unwrap();
        assert_eq!(regularity_s(&t).unwrap(), 2);
        assert_eq!(koszul_betti(&t, 0, 2).unwrap(), 6);
        assert_eq!(koszul_betti(&t, 1, 3).unwrap(), 8);
        assert_eq!(koszul_betti(&t, 2, 4).unwrap(), 3);
    }

    #[test]
    fn zero_module() {
        let p = parse_smod("ring n=1\nrowdegs=[0] coldegs=[0]\nentry 0 0 : 1\n").unwrap();
        let m = SlicedModule::slice(&p, 0, 4).unwrap();
        assert!(matches!(regularity_s(&m), Err(Error::ZeroModule(_))));
    }

    #[test]
    fn twisted_monomial_quotient() {
        // S(n-1)/(x^n, x^(n-1)y) on P^1: two linear relations with one linear syzygy.
        for n in [3i32, 5] {
            let src = format!(
                "ring n=1\nrowdegs=[{}] coldegs=[1,1]\nentry 0 0 : x0^{n}\nentry 0 1 : x0^{}*x1\n",
                1 - n,
                n - 1
            );
            let m = SlicedModule::slice(&parse_smod(&src).unwrap(), 1 - n, 4).unwrap();
            assert_eq!(koszul_betti(&m, 0, 1 - n).unwrap(), 1);
            assert_eq!(koszul_betti(&m, 1, 1).unwrap(), 2);
            assert_eq!(koszul_betti(&m, 2, 2).unwrap(), 1);
        }
    }
}
