//! Arithmetic in the exterior algebra and its free modules.

use bggtate::efree::{FreeEModule, VectorizedModule};
use bggtate::extalg::{parse_element, AlgebraContext};

fn main() -> bggtate::Result<()> {
    let ctx = AlgebraContext::with_prime(3, 32003)?;
    let f = ctx.field();
    let a = parse_element("e0 + 2*e1", &ctx, -1).unwrap();
    let b = parse_element("e1 - e3", &ctx, -1).unwrap();
    println!("a = {}", a.to_text(f));
    println!("b = {}", b.to_text(f));
    println!("a*b = {}", a.mul(&b, f).to_text(f));
    println!("b*a = {}", b.mul(&a, f).to_text(f));
    println!("a*a = {}", a.mul(&a, f).to_text(f));

    let free = FreeEModule::new(&ctx, vec![0, 1]);
    let m = VectorizedModule::free(&free);
    println!("E + E(-1) over 4 variables has slices {:?} in degrees {}..{}", m.dims(), m.lo(), m.hi());
    Ok(())
}
