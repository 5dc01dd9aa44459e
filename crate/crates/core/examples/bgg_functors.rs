//! The functor R from graded S-modules to linear complexes over E, and back.

use bggtate::bgg::{bgg_l_read, bgg_r};
use bggtate::efree::write_emat;
use bggtate::smod::{parse_smod, SlicedModule};

const CUBIC: &str = include_str!("data/cubic.smod");

fn main() -> bggtate::Result<()> {
    let pres = parse_smod(CUBIC)?;
    let m = SlicedModule::slice(&pres, 0, 6)?;
    let r = bgg_r(&m)?;
    println!("R(M) ranks from position {}: {:?}", r.lo(), r.ranks());
    for i in r.lo() + 1..r.hi() {
        println!("homology at {i}: {}", r.exactness_defect(i)?);
    }
    println!("first differential:\n{}", write_emat(r.map(r.lo())));
    let back = bgg_l_read(&r)?;
    println!("slices read back: {:?} (original {:?})", back.dims(), m.dims());
    Ok(())
}
