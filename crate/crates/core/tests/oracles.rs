//! Library routes checked against independent brute-force computations.

mod common;

use common::*;
use djc::invariants::{lower, Vec4};
use djc::*;

#[test]
fn tangle_matches_eightfold_sum() {
    for seed in 0..40 {
        let s = random_state(seed);
        assert!(
            rel_close(four_tangle(&s), tangle_eightfold(&s), 1e-10),
            "seed {seed}"
        );
    }
    assert!((tangle_eightfold(&FourQubitState::ghz()) - 1.0).abs() < 1e-12);
}

#[test]
fn w_state_tangle_vanishes_by_both_routes() {
    let w = FourQubitState::w();
    assert_eq!(tangle_eightfold(&w), 0.0);
    assert_eq!(four_tangle(&w), 0.0);
}

#[test]
fn covectors_are_signed_minors() {
    for seed in 0..50 {
        let bl = blocks(&random_state(seed));
        let q = covectors(&bl);
        let (a, b, cc, d) = (bl.a, bl.b, bl.c, bl.d);
        for k in 0..4 {
            // ε_{αβγδ} with the free index in each of the four slots
            let free_first = |u: &Vec4, v: &Vec4, w: &Vec4| triple_minor(k, u, v, w);
            let expect_a = -free_first(&b, &cc, &d);
            // moving the free index to slot 2, 3, 4 costs one transposition each
            let expect_b = -free_first(&a, &cc, &d);
            let expect_c = free_first(&a, &b, &d);
            let expect_d = free_first(&a, &b, &cc);
            assert!((q.a[k] - expect_a).norm() < 1e-13);
            assert!((q.b[k] - expect_b).norm() < 1e-13);
            assert!((q.c[k] - expect_c).norm() < 1e-13);
            assert!((q.d[k] - expect_d).norm() < 1e-13);
        }
    }
}

#[test]
fn i4_is_determinant_of_lowered_blocks() {
    for seed in 0..100 {
        let s = random_state(seed);
        let bl = blocks(&s);
        let rows: Vec<Vec<C64>> = bl
            .as_array()
            .iter()
            .map(|v| lower_kron(v).to_vec())
            .collect();
        assert!((invariant_i4(&s) - det(rows)).norm() < 1e-12, "seed {seed}");
    }
}

#[test]
fn lowering_matches_kronecker_metric() {
    for seed in 0..10 {
        let v = blocks(&random_state(seed)).c;
        assert_eq!(lower(&v), lower_kron(&v));
    }
}

#[test]
fn local_action_matches_dense_kronecker_product() {
    for seed in 0..30 {
        let s = random_state(seed);
        let u = LocalUnitary::random(seed + 77);
        let dense = mat_vec(&kron4(u.factors()), s.amps());
        let fast = apply_local_unitaries(&s, &u);
        for k in 0..16 {
            assert!((dense[k] - fast[k]).norm() < 1e-13);
        }
    }
}

#[test]
fn i2_plucker_unrestricted_sum_is_four_times_larger() {
    // Summing over all (μ, ν, α, β) instead of ordered pairs counts every
    // Plücker coordinate four times.
    let s = random_state(99);
    let m = |r: usize, col: usize| s[4 * r + col];
    let p =
        |mu: usize, nu: usize, al: usize, be: usize| m(mu, al) * m(nu, be) - m(mu, be) * m(nu, al);
    let g = djc::invariants::METRIC;
    let mut full = c(0.0, 0.0);
    for mu in 0..4 {
        for nu in 0..4 {
            for al in 0..4 {
                for be in 0..4 {
                    let mut raised = c(0.0, 0.0);
                    for m2 in 0..4 {
                        for n2 in 0..4 {
                            for a2 in 0..4 {
                                for b2 in 0..4 {
                                    let w = g[mu][m2] * g[nu][n2] * g[al][a2] * g[be][b2];
                                    if w != 0.0 {
                                        raised += p(m2, n2, a2, b2) * w;
                                    }
                                }
                            }
                        }
                    }
                    full += raised * p(mu, nu, al, be);
                }
            }
        }
    }
    assert!(rel_close_c(
        full / 6.0,
        4.0 * invariant_i2_plucker(&s),
        1e-12
    ));
    assert!(rel_close_c(full / 24.0, invariant_i2_wedge(&s), 1e-10));
}

#[test]
fn unitarity_of_oracle_evolution_on_a_grid() {
    let params = [
        ModelParams::default(),
        ModelParams::detuned(1.0, 1.0, 0.5, 1.0, 1.0, 1.0).unwrap(),
        ModelParams::detuned(0.3, 2.0, 1.5, -0.4, 2.0, 1.0).unwrap(),
    ];
    for p in params {
        for nmax in [2, 4] {
            let ev = JointEvolver::new(&p, FockTruncation::new(nmax).unwrap());
            for k in 0..15 {
                let init =
                    InitialStateSpec::new(Family::Phi, 0.1 * k as f64, 0.2 * k as f64).unwrap();
                let j = ev.evolve(&init, 0.77 * k as f64);
                assert!((j.norm() - 1.0).abs() < 1e-12);
                let (s, _) = extract_four_qubit(&j).unwrap();
                let closed = phi_state(&p, init.alpha, init.beta, 0.77 * k as f64);
                assert!((closed.norm() - 1.0).abs() < 1e-12);
                assert!((s.norm() - 1.0).abs() < 1e-12);
            }
        }
    }
}

#[test]
fn truncation_independence() {
    let p = ModelParams::detuned(1.1, 0.9, 0.5, 1.0, 1.3, 0.6).unwrap();
    for fam in [Family::Phi, Family::Psi] {
        let init = InitialStateSpec::new(fam, 0.6, 2.5).unwrap();
        for k in 0..10 {
            let t = 0.9 * k as f64;
            let (base, _) =
                extract_four_qubit(&evolve_joint(&p, FockTruncation::new(2).unwrap(), &init, t))
                    .unwrap();
            for nmax in [3, 4] {
                let (s, leak) = extract_four_qubit(&evolve_joint(
                    &p,
                    FockTruncation::new(nmax).unwrap(),
                    &init,
                    t,
                ))
                .unwrap();
                assert!(leak < 1e-12);
                for i in 0..16 {
                    assert!((s[i] - base[i]).norm() < 1e-12);
                }
            }
        }
    }
}

#[test]
fn resonance_tangle_is_periodic() {
    for g in [0.5, 1.0, 1.7] {
        let p = ModelParams::resonant(1.0, 1.3, g, g).unwrap();
        let period = std::f64::consts::PI / (2.0 * g);
        for k in 0..20 {
            let t = 0.173 * k as f64;
            let a = four_tangle(&phi_state(&p, 0.3, 0.0, t));
            let b = four_tangle(&phi_state(&p, 0.3, 0.0, t + period));
            assert!((a - b).abs() < 1e-10);
        }
    }
}

#[test]
fn tangle_ignores_beta_for_phi() {
    let p = ModelParams::detuned(1.0, 2.0, 0.2, 0.7, 0.9, 1.1).unwrap();
    for k in 0..10 {
        let t = 0.6 * k as f64;
        let base = four_tangle(&phi_state(&p, 0.5, 0.0, t));
        for beta in [0.5, 1.5, std::f64::consts::PI] {
            assert!((four_tangle(&phi_state(&p, 0.5, beta, t)) - base).abs() < 1e-12);
        }
    }
}

#[test]
fn double_coupling_case_matches_two_frequency_product() {
    for gb in [0.4, 0.7, 1.0] {
        let p = ModelParams::resonant(1.0, 1.0, 2.0 * gb, gb).unwrap();
        for k in 0..30 {
            let (alpha, t) = (0.05 * k as f64, 0.2 * k as f64);
            let expected =
                0.25 * alpha.cos().powi(2) * ((2.0 * p.g_a * t).sin() * (2.0 * gb * t).sin()).abs();
            let got = invariant_i1(&phi_state(&p, alpha, 0.0, t)).norm();
            assert!((got - expected).abs() < 1e-12);
        }
    }
}
