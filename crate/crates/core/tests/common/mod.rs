//! Seeded random corpora shared by the integration tests.
#![allow(dead_code)]

use bggtate::efree::{FreeEModule, GradedMap, VectorizedModule};
use bggtate::extalg::{AlgebraContext, ExtElement, FieldContext};
use bggtate::smod::{exponent_vectors, Poly, PolyRing, SPresentation};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const CUBIC: &str = "ring n=2\nrowdegs=[0] coldegs=[3]\nentry 0 0 : x0^3 + x1^3 + x2^3\n";

/// A random presentation over `n + 1` exterior variables: one or two
/// generators in degrees 0 and 1, up to three relations of degree -1 or -2.
pub fn random_e_presentation(seed: u64, max_n: usize) -> GradedMap {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(1..=max_n);
    let ctx = AlgebraContext::with_prime(n, 32003).unwrap();
    let vars = ctx.vars() as i32;
    let rows: Vec<i32> = (0..rng.gen_range(1..=2)).map(|_| rng.gen_range(0..=1)).collect();
    let cols: Vec<i32> = (0..rng.gen_range(1..=3))
        .map(|_| rows[rng.gen_range(0..rows.len())] - rng.gen_range(1..=2))
        .collect();
    let entries = rows
        .iter()
        .map(|&r| {
            cols.iter()
                .map(|&c| {
                    let d = c - r;
                    if d < 0 && d >= -vars {
                        ctx.random_element(d, &mut rng).unwrap()
                    } else {
                        ExtElement::zero(d)
                    }
                })
                .collect()
        })
        .collect();
    GradedMap::new(FreeEModule::new(&ctx, cols), FreeEModule::new(&ctx, rows), entries).unwrap()
}

pub fn random_e_module(seed: u64) -> VectorizedModule {
    random_e_presentation(seed, 4).vectorize_coker()
}

fn random_poly(ring: &PolyRing, d: i32, rng: &mut ChaCha8Rng) -> Poly {
    if d < 0 {
        return Poly::zero(d);
    }
    let p = ring.field().p();
    let terms: Vec<(Vec<u8>, u32)> = exponent_vectors(ring.vars(), d as usize)
        .into_iter()
        .filter_map(|m| rng.gen_bool(0.5).then(|| (m, rng.gen_range(1..p))))
        .collect();
    if terms.is_empty() {
        Poly::zero(d)
    } else {
        Poly::from_terms(ring, terms).unwrap()
    }
}

/// A random graded S-module on `P^n`, `n` in `1..=3`: one or two generators
/// in degrees 0 and 1 with up to three relations of degree one or two above
/// the top generator.
pub fn random_s_presentation(seed: u64) -> SPresentation {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(1..=3);
    let ring = PolyRing::new(n, FieldContext::default());
    let rows: Vec<i32> = (0..rng.gen_range(1..=2)).map(|_| rng.gen_range(0..=1)).collect();
    let top = *rows.iter().max().unwrap();
    let cols: Vec<i32> = (0..rng.gen_range(0..=3)).map(|_| top + rng.gen_range(1..=2)).collect();
    let entries = rows.iter().map(|&r| cols.iter().map(|&c| random_poly(&ring, c - r, &mut rng)).collect()).collect();
    SPresentation::new(ring, rows, cols, entries).unwrap()
}
