//! Algebraic properties of the invariants on random states.

mod common;

use common::*;
use djc::invariants::d4_tolerance;
use djc::*;
use proptest::prelude::*;

fn invariants(s: &FourQubitState) -> [C64; 4] {
    [
        invariant_i1(s),
        invariant_i2_wedge(s),
        invariant_i3(s),
        invariant_i4(s),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn i2_routes_agree(seed in any::<u64>()) {
        let s = random_state(seed);
        prop_assert!(rel_close_c(invariant_i2_wedge(&s), invariant_i2_plucker(&s), 1e-10));
    }

    #[test]
    fn tangle_is_sixteen_i1_squared(seed in any::<u64>()) {
        let s = random_state(seed);
        prop_assert!(rel_close(four_tangle(&s), 16.0 * invariant_i1(&s).norm_sqr(), 1e-10));
    }

    #[test]
    fn local_unitary_invariance(state_seed in any::<u64>(), u_seed in any::<u64>()) {
        let s = random_state(state_seed);
        let t = apply_local_unitaries(&s, &LocalUnitary::random(u_seed));
        let (a, b) = (InvariantSet::of(&s), InvariantSet::of(&t));
        prop_assert!(a.max_abs_diff(&b) < 1e-9);
    }

    #[test]
    fn slocc_invariance(state_seed in any::<u64>(), g_seed in 0u64..1_000_000) {
        let s = random_state(state_seed);
        let f = [random_sl2(4 * g_seed), random_sl2(4 * g_seed + 1), random_sl2(4 * g_seed + 2), random_sl2(4 * g_seed + 3)];
        let t = apply_local_operators(&s, &f);
        for (x, y) in invariants(&s).iter().zip(invariants(&t).iter()) {
            prop_assert!((x - y).norm() <= 1e-8 * x.norm().max(1e-3));
        }
    }

    #[test]
    fn degree_homogeneity(seed in any::<u64>(), re in -2.0f64..2.0, im in -2.0f64..2.0) {
        prop_assume!(re.hypot(im) > 0.1);
        let k = C64::new(re, im);
        let s = random_state(seed);
        let t = s.scaled(k);
        let degrees = [2, 4, 6, 4];
        for ((x, y), d) in invariants(&s).iter().zip(invariants(&t).iter()).zip(degrees) {
            prop_assert!(rel_close_c(*y, x * k.powi(d), 1e-10));
        }
        prop_assert!(rel_close(four_tangle(&t), four_tangle(&s) * k.norm().powi(4), 1e-10));
    }

    #[test]
    fn d4_consistent_with_definition(seed in any::<u64>()) {
        let inv = InvariantSet::of(&random_state(seed));
        let fd = four_determinant(inv.i1, inv.i2, inv.i3, inv.i4);
        prop_assert!((fd.d4 - inv.d4).norm() <= d4_tolerance(fd.s));
    }
}

#[test]
fn doubling_scales_by_exact_powers_of_two() {
    for seed in 0..20 {
        let s = random_state(seed);
        let t = s.scaled(c(2.0, 0.0));
        let degrees = [2, 4, 6, 4];
        for ((x, y), d) in invariants(&s)
            .iter()
            .zip(invariants(&t).iter())
            .zip(degrees)
        {
            assert!(rel_close_c(*y, x * 2f64.powi(d), 1e-10));
        }
        assert!(rel_close(four_tangle(&t), 16.0 * four_tangle(&s), 1e-10));
    }
}
