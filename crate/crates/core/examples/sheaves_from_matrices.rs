//! Rebuilding a sheaf from a matrix over E, then finding the smallest linear
//! space that carries it.

use bggtate::efree::parse_emat;
use bggtate::eres::RegularityOptions;
use bggtate::paramspace::{membership_x0, reconstruct, sheaf_regularity, TypeVectors};
use bggtate::tate::descent;

fn main() -> bggtate::Result<()> {
    let phi = parse_emat(include_str!("data/line.emat"))?;
    let opts = RegularityOptions::default();
    let m = membership_x0(&phi, opts)?;
    println!("membership: {m:?}");

    let t = TypeVectors::new(vec![1], vec![2])?;
    let (window, table) = reconstruct(&t, &phi, -3, 3, opts)?;
    println!("{table}");
    println!("sheaf regularity {:?}", sheaf_regularity(&table));
    let (n0, span) = descent(&window, 0)?;
    let f = window.ctx().field();
    let forms: Vec<String> = span.iter().map(|e| e.to_text(f)).collect();
    println!("lives on P^{n0}, spanned by {}", forms.join(", "));
    Ok(())
}
