//! Random points of a parameter space and the sheaves they encode.

use bggtate::eres::RegularityOptions;
use bggtate::extalg::AlgebraContext;
use bggtate::paramspace::{census, TypeVectors};

fn main() -> bggtate::Result<()> {
    let t = TypeVectors::new(vec![1], vec![2])?;
    for n in 2..=4 {
        let ctx = AlgebraContext::with_prime(n, 101)?;
        let r = census(&t, &ctx, 100, (-3, 4), 11, RegularityOptions::default())?;
        println!(
            "n={n}: {} members, {} non-members, {} distinct tables, max descent {:?}",
            r.members,
            r.non_members,
            r.distinct_tables.len(),
            r.max_descent_dim
        );
    }
    Ok(())
}
