//! Graded Betti numbers and regularity of S-modules through Koszul homology.

use bggtate::smod::{betti_table_s, parse_smod, regularity_s, SlicedModule};

const TWISTED_CUBIC: &str = include_str!("data/twisted_cubic.smod");

fn main() -> bggtate::Result<()> {
    let pres = parse_smod(TWISTED_CUBIC)?;
    let m = SlicedModule::slice(&pres, 0, 8)?;
    println!("Hilbert function in degrees 0..8: {:?}", m.dims());
    println!("Betti table over S:\n{}", betti_table_s(&m));
    println!("regularity {}", regularity_s(&m)?);
    Ok(())
}
