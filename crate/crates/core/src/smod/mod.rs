//! Graded modules over the polynomial ring `S = k[x0..xn]`, represented by
//! finite windows of degree slices.

/// Exponent vectors of total degree `deg` in `vars` variables, in graded
/// lexicographic order (`x0^deg` first).
pub fn exponent_vectors(vars: usize, deg: usize) -> Vec<Vec<u8>> {
    fn rec(vars: usize, deg: usize, prefix: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if vars == 1 {
            prefix.push(deg as u8);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for a in (0..=deg).rev() {
            prefix.push(a as u8);
            rec(vars - 1, deg - a, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if vars > 0 {
        rec(vars, deg, &mut Vec::with_capacity(vars), &mut out);
    } else if deg == 0 {
        out.push(Vec::new());
    }
    out
}

mod koszul;
mod poly;
mod pres;
mod sliced;

pub use koszul::{betti_table_s, koszul_betti, regularity_s};
pub use poly::{parse_poly, MonomialBasis, Poly, PolyRing};
pub use pres::{parse_smod, SPresentation};
pub use sliced::SlicedModule;
