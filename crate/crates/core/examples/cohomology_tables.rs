//! Cohomology tables of sheaves from their Tate resolutions.

use bggtate::extalg::FieldContext;
use bggtate::smod::{parse_smod, PolyRing, SPresentation};
use bggtate::tate::tate_window_of;

fn main() -> bggtate::Result<()> {
    let cubic = parse_smod(include_str!("data/cubic.smod"))?;
    let t = tate_window_of(&cubic, -3, 3, None)?;
    println!("plane cubic, Tate ranks {:?}:\n{}", t.ranks(), t.cohomology_table());

    let p3 = SPresentation::free(PolyRing::new(3, FieldContext::default()), vec![0]);
    println!("structure sheaf of P^3:\n{}", tate_window_of(&p3, -6, 2, None)?.cohomology_table());

    let curve = parse_smod(include_str!("data/twisted_cubic.smod"))?;
    let table = tate_window_of(&curve, -2, 3, None)?.cohomology_table();
    println!("twisted cubic:\n{table}");
    println!("Hilbert polynomial values: {:?}", table.euler_characteristics());
    Ok(())
}
