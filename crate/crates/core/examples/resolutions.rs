//! Minimal free resolutions over E: Betti tables, regularity and the
//! invariants alpha_k, checked against the Cartan complex.

use bggtate::efree::parse_emat;
use bggtate::eres::{alpha_hilbert_rhs, alphas, betti_cartan, regularity_of_coker, RegularityOptions, ResolutionWindow};

const QUADRIC: &str = include_str!("data/quadric.emat");

fn main() -> bggtate::Result<()> {
    let phi = parse_emat(QUADRIC)?;
    let mut res = ResolutionWindow::of_coker(&phi);
    res.extend_to(6);
    let betti = res.betti();
    println!("Betti table of E/(e0*e1 + e2*e3):\n{betti}");

    let m = phi.vectorize_coker();
    let agree = (0..5).all(|i| (m.lo() - i..=m.hi() - i).all(|j| betti.get(i as usize, j) == betti_cartan(&m, i as usize, j)));
    println!("Cartan complex agrees on the first five columns: {agree}");

    let reg = regularity_of_coker(&phi, RegularityOptions::default())?;
    println!("regularity {} (certified: {}, {} steps)", reg.value, reg.certified, reg.steps);

    for (k, a) in alphas(&m) {
        println!("alpha_{k} = {a}");
    }
    for e in m.lo()..=m.hi() {
        println!("dim M_{e} = {} = {}", m.dim(e), alpha_hilbert_rhs(&m, e));
    }
    Ok(())
}
