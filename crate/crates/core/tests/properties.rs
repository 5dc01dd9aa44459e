//! Algebraic invariants on random inputs.

mod common;

use bggtate::eres::{alpha_hilbert_rhs, cone_extend, CartanComplex, ResolutionWindow};
use bggtate::extalg::AlgebraContext;
use bggtate::tate::tate_window_of;
use common::{random_e_presentation, random_s_presentation};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, ..ProptestConfig::default() })]

    #[test]
    fn products_anticommute_and_associate(seed in any::<u64>(), n in 1usize..5, da in 1i32..3, db in 1i32..3, dc in 1i32..3) {
        let ctx = AlgebraContext::with_prime(n, 32003).unwrap();
        let f = ctx.field();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a, b, c) = (
            ctx.random_element(-da, &mut rng).unwrap(),
            ctx.random_element(-db, &mut rng).unwrap(),
            ctx.random_element(-dc, &mut rng).unwrap(),
        );
        prop_assert_eq!(a.mul(&b, f).mul(&c, f), a.mul(&b.mul(&c, f), f));
        let sign = if (da * db) % 2 == 0 { b.mul(&a, f) } else { b.mul(&a, f).neg(f) };
        prop_assert_eq!(a.mul(&b, f), sign);
        if da % 2 == 1 {
            prop_assert!(a.mul(&a, f).is_zero());
        }
    }

    #[test]
    fn dual_is_an_involution(seed in any::<u64>()) {
        let phi = random_e_presentation(seed, 3);
        prop_assert_eq!(phi.dual().dual(), phi);
    }

    #[test]
    fn cartan_matches_resolution(seed in any::<u64>()) {
        let m = random_e_presentation(seed, 2).vectorize_coker();
        prop_assume!(!m.is_zero());
        let mut res = ResolutionWindow::of_module(&m);
        res.extend_to(5);
        let table = res.betti();
        let mut cartan = CartanComplex::new(&m);
        for i in 0..=4usize {
            for j in m.lo() - i as i32..=m.hi() - i as i32 {
                prop_assert_eq!(table.get(i, j), cartan.betti(i, j), "beta_{},{}", i, j);
            }
        }
    }

    #[test]
    fn alphas_recover_the_hilbert_function(seed in any::<u64>()) {
        let m = random_e_presentation(seed, 3).vectorize_coker();
        for e in m.lo()..=m.hi() {
            prop_assert_eq!(alpha_hilbert_rhs(&m, e), m.dim(e) as i64);
        }
    }

    #[test]
    fn cone_keeps_betti_numbers(seed in any::<u64>()) {
        let m = random_e_presentation(seed, 2).vectorize_coker();
        prop_assume!(!m.is_zero());
        let c = cone_extend(&m);
        prop_assert!(c.check_relations().is_ok());
        let (mut before, mut after) = (CartanComplex::new(&m), CartanComplex::new(&c));
        for i in 0..=4usize {
            for j in c.lo() - i as i32..=c.hi() - i as i32 {
                prop_assert_eq!(before.betti(i, j), after.betti(i, j));
            }
        }
    }

    #[test]
    fn twisting_shifts_betti_numbers(seed in any::<u64>(), a in -2i32..3) {
        let m = random_e_presentation(seed, 2).vectorize_coker();
        prop_assume!(!m.is_zero());
        let t = m.twist(a);
        let (mut cm, mut ct) = (CartanComplex::new(&m), CartanComplex::new(&t));
        for i in 0..=3usize {
            for j in m.lo() - i as i32..=m.hi() - i as i32 {
                prop_assert_eq!(cm.betti(i, j), ct.betti(i, j - a));
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 12, ..ProptestConfig::default() })]

    #[test]
    fn tate_windows_are_exact_with_polynomial_euler_characteristic(seed in any::<u64>()) {
        let w = tate_window_of(&random_s_presentation(seed), -2, 2, None).unwrap();
        for k in w.lo() + 1..w.hi() {
            prop_assert_eq!(w.exactness_defect(k).unwrap(), 0, "position {}", k);
        }
        let table = w.cohomology_table();
        prop_assert!(table.stray.is_empty());
        prop_assert_ne!(table.euler_is_polynomial(), Some(false));
    }
}
