//! Four-qubit pure states.
//!
//! Amplitudes are stored in a flat array indexed by
//! `k = 8·x4 + 4·x3 + 2·x2 + x1`, where `x4` is atom A, `x3` is atom B, `x2`
//! is the photon number of cavity a and `x1` the photon number of cavity b.
//! An excited atom (↑) and a one-photon cavity map to bit value 1.

use std::ops::Index;

use num_complex::Complex64 as C64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::error::StateError;

/// Magnitude below which every amplitude counts as zero when normalizing.
pub const ZERO_VECTOR_THRESHOLD: f64 = 1e-30;

/// Tolerance on the unitarity residual `‖U†U − 1‖` of a local factor.
pub const UNITARITY_TOL: f64 = 1e-12;

/// Number of amplitudes of a four-qubit state.
pub const DIM: usize = 16;

/// Pack the four qubit values into the flat amplitude index.
#[inline]
pub fn pack_index(x4: u8, x3: u8, x2: u8, x1: u8) -> usize {
    debug_assert!(x4 < 2 && x3 < 2 && x2 < 2 && x1 < 2);
    ((x4 as usize) << 3) | ((x3 as usize) << 2) | ((x2 as usize) << 1) | x1 as usize
}

/// Inverse of [`pack_index`]: returns `(x4, x3, x2, x1)`.
#[inline]
pub fn unpack_index(k: usize) -> (u8, u8, u8, u8) {
    debug_assert!(k < DIM);
    (
        ((k >> 3) & 1) as u8,
        ((k >> 2) & 1) as u8,
        ((k >> 1) & 1) as u8,
        (k & 1) as u8,
    )
}

/// A pure state of four qubits.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FourQubitState {
    amps: [C64; DIM],
}

impl FourQubitState {
    /// Build a state from its 16 amplitudes, optionally rescaling to unit norm.
    pub fn new(amps: [C64; DIM], normalize: bool) -> Result<Self, StateError> {
        if let Some(index) = amps
            .iter()
            .position(|a| !(a.re.is_finite() && a.im.is_finite()))
        {
            return Err(StateError::NonFinite { index });
        }
        let mut state = Self { amps };
        if normalize {
            if amps.iter().all(|a| a.norm() < ZERO_VECTOR_THRESHOLD) {
                return Err(StateError::ZeroVector);
            }
            let n = state.norm();
            state.amps.iter_mut().for_each(|a| *a /= n);
        }
        Ok(state)
    }

    /// Computational basis state `e_k`.
    pub fn basis(k: usize) -> Self {
        assert!(k < DIM, "basis index {k} out of range");
        let mut amps = [C64::new(0.0, 0.0); DIM];
        amps[k] = C64::new(1.0, 0.0);
        Self { amps }
    }

    /// `(|0000⟩ + |1111⟩)/√2`.
    pub fn ghz() -> Self {
        let mut amps = [C64::new(0.0, 0.0); DIM];
        amps[0] = C64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        amps[15] = amps[0];
        Self { amps }
    }

    /// Equal superposition of the four single-excitation basis states.
    pub fn w() -> Self {
        let mut amps = [C64::new(0.0, 0.0); DIM];
        for k in [1, 2, 4, 8] {
            amps[k] = C64::new(0.5, 0.0);
        }
        Self { amps }
    }

    pub fn amps(&self) -> &[C64; DIM] {
        &self.amps
    }

    pub fn into_amps(self) -> [C64; DIM] {
        self.amps
    }

    /// Euclidean norm `√(Σ|Υ_k|²)`.
    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    /// The state multiplied by a complex scalar (not renormalized).
    pub fn scaled(&self, c: C64) -> Self {
        let mut amps = self.amps;
        amps.iter_mut().for_each(|a| *a *= c);
        Self { amps }
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &Self) -> C64 {
        self.amps
            .iter()
            .zip(other.amps.iter())
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    /// Indices of amplitudes with modulus above `tol`.
    pub fn support(&self, tol: f64) -> Vec<usize> {
        (0..DIM).filter(|&k| self.amps[k].norm() > tol).collect()
    }
}

impl Index<usize> for FourQubitState {
    type Output = C64;

    fn index(&self, k: usize) -> &C64 {
        &self.amps[k]
    }
}

/// Entry-point alias for [`FourQubitState::new`].
pub fn make_state(amps: [C64; DIM], normalize: bool) -> Result<FourQubitState, StateError> {
    FourQubitState::new(amps, normalize)
}

/// Norm of a state.
pub fn norm(state: &FourQubitState) -> f64 {
    state.norm()
}

/// A 2×2 complex matrix, row-major.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mat2(pub [[C64; 2]; 2]);

impl Mat2 {
    pub fn identity() -> Self {
        let (o, z) = (C64::new(1.0, 0.0), C64::new(0.0, 0.0));
        Self([[o, z], [z, o]])
    }

    pub fn pauli_x() -> Self {
        let (o, z) = (C64::new(1.0, 0.0), C64::new(0.0, 0.0));
        Self([[z, o], [o, z]])
    }

    pub fn pauli_y() -> Self {
        let (i, z) = (C64::new(0.0, 1.0), C64::new(0.0, 0.0));
        Self([[z, -i], [i, z]])
    }

    pub fn det(&self) -> C64 {
        let m = &self.0;
        m[0][0] * m[1][1] - m[0][1] * m[1][0]
    }

    pub fn adjoint(&self) -> Self {
        let m = &self.0;
        Self([
            [m[0][0].conj(), m[1][0].conj()],
            [m[0][1].conj(), m[1][1].conj()],
        ])
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let (a, b) = (&self.0, &rhs.0);
        let mut out = [[C64::new(0.0, 0.0); 2]; 2];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                *v = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            }
        }
        Self(out)
    }

    /// Largest entrywise modulus of `U†U − 1`.
    pub fn unitarity_residual(&self) -> f64 {
        let p = self.adjoint().mul(self);
        let id = Self::identity();
        (0..2)
            .flat_map(|i| (0..2).map(move |j| (i, j)))
            .map(|(i, j)| (p.0[i][j] - id.0[i][j]).norm())
            .fold(0.0, f64::max)
    }
}

/// One 2×2 unitary per tensor slot, ordered `[U4, U3, U2, U1]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LocalUnitary {
    factors: [Mat2; 4],
}

impl LocalUnitary {
    pub fn new(factors: [Mat2; 4]) -> Result<Self, StateError> {
        for (i, f) in factors.iter().enumerate() {
            let residual = f.unitarity_residual();
            if residual.is_nan() || residual > UNITARITY_TOL {
                return Err(StateError::NonUnitaryFactor {
                    slot: 4 - i,
                    residual,
                });
            }
        }
        Ok(Self { factors })
    }

    pub fn identity() -> Self {
        Self {
            factors: [Mat2::identity(); 4],
        }
    }

    /// Four independent Haar SU(2) factors derived from one seed.
    pub fn random(seed: u64) -> Self {
        let base = seed.wrapping_mul(4);
        Self {
            factors: [
                random_su2(base),
                random_su2(base.wrapping_add(1)),
                random_su2(base.wrapping_add(2)),
                random_su2(base.wrapping_add(3)),
            ],
        }
    }

    pub fn factors(&self) -> &[Mat2; 4] {
        &self.factors
    }

    /// Slot-wise product `other · self`, i.e. apply `self` first.
    pub fn then(&self, other: &Self) -> Self {
        let mut factors = self.factors;
        for (f, o) in factors.iter_mut().zip(other.factors.iter()) {
            *f = o.mul(f);
        }
        Self { factors }
    }
}

/// `(U4 ⊗ U3 ⊗ U2 ⊗ U1)|state⟩` for arbitrary 2×2 factors (no unitarity check).
///
/// With determinant-one factors this is the SLOCC group action.
pub fn apply_local_operators(state: &FourQubitState, factors: &[Mat2; 4]) -> FourQubitState {
    let mut amps = state.amps;
    for (slot, m) in factors.iter().enumerate() {
        let bit = 3 - slot;
        let stride = 1usize << bit;
        let mut next = [C64::new(0.0, 0.0); DIM];
        for (k, out) in next.iter_mut().enumerate() {
            let row = (k >> bit) & 1;
            let k0 = k & !stride;
            *out = m.0[row][0] * amps[k0] + m.0[row][1] * amps[k0 | stride];
        }
        amps = next;
    }
    FourQubitState { amps }
}

/// Local-unitary action on a state. Factors were validated when `u` was built.
pub fn apply_local_unitaries(state: &FourQubitState, u: &LocalUnitary) -> FourQubitState {
    apply_local_operators(state, &u.factors)
}

/// Deterministic Haar-random unit state: 16 complex standard normals, normalized.
pub fn random_state(seed: u64) -> FourQubitState {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let mut amps = [C64::new(0.0, 0.0); DIM];
        for a in amps.iter_mut() {
            *a = C64::new(
                StandardNormal.sample(&mut rng),
                StandardNormal.sample(&mut rng),
            );
        }
        if let Ok(s) = FourQubitState::new(amps, true) {
            return s;
        }
    }
}

/// Deterministic Haar-random element of SU(2).
///
/// A uniform point `(a, b)` on the unit 3-sphere in ℂ² gives
/// `[[a, −b̄], [b, ā]]`.
pub fn random_su2(seed: u64) -> Mat2 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ SU2_STREAM);
    let mut v = [0.0f64; 4];
    let mut n2 = 0.0;
    while n2 < 1e-12 {
        for x in v.iter_mut() {
            *x = StandardNormal.sample(&mut rng);
        }
        n2 = v.iter().map(|x| x * x).sum();
    }
    let n = n2.sqrt();
    let a = C64::new(v[0] / n, v[1] / n);
    let b = C64::new(v[2] / n, v[3] / n);
    Mat2([[a, -b.conj()], [b, a.conj()]])
}

// Keeps the SU(2) stream disjoint from `random_state` for equal seeds.
const SU2_STREAM: u64 = 0x9e37_79b9_7f4a_7c15;

#[cfg(test)]
mod tests {
    use super::*;

    const TOL: f64 = 1e-12;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn index_round_trip() {
        for k in 0..DIM {
            let (x4, x3, x2, x1) = unpack_index(k);
            assert_eq!(pack_index(x4, x3, x2, x1), k);
        }
        assert_eq!(pack_index(1, 1, 0, 0), 12);
        assert_eq!(pack_index(0, 0, 1, 1), 3);
    }

    #[test]
    fn ghz_from_amplitudes() {
        let mut amps = [c(0.0, 0.0); DIM];
        amps[0] = c(1.0, 0.0);
        amps[15] = c(1.0, 0.0);
        let s = make_state(amps, true).unwrap();
        assert!((s.norm() - 1.0).abs() < TOL);
        assert!((s[0].re - std::f64::consts::FRAC_1_SQRT_2).abs() < TOL);
        let g = FourQubitState::ghz();
        assert!((0..DIM).all(|k| (s[k] - g[k]).norm() < TOL));
    }

    #[test]
    fn zero_vector_rejected() {
        let amps = [c(0.0, 0.0); DIM];
        assert_eq!(make_state(amps, true), Err(StateError::ZeroVector));
        let mut tiny = amps;
        tiny[3] = c(1e-31, 0.0);
        assert_eq!(make_state(tiny, true), Err(StateError::ZeroVector));
        assert!(make_state(amps, false).is_ok());
    }

    #[test]
    fn non_finite_rejected() {
        let mut amps = [c(0.0, 0.0); DIM];
        amps[7] = c(f64::NAN, 0.0);
        assert_eq!(
            make_state(amps, false),
            Err(StateError::NonFinite { index: 7 })
        );
    }

    #[test]
    fn basis_and_norms() {
        let e5 = make_state(*FourQubitState::basis(5).amps(), true).unwrap();
        assert_eq!(e5[5], c(1.0, 0.0));
        assert!((norm(&e5) - 1.0).abs() < TOL);
        assert!((norm(&FourQubitState::ghz()) - 1.0).abs() < TOL);
        let two_e0 = FourQubitState::basis(0).scaled(c(2.0, 0.0));
        assert!((norm(&two_e0) - 2.0).abs() < TOL);
    }

    #[test]
    fn norm_homogeneity() {
        for seed in 0..50 {
            let s = random_state(seed);
            let cs = random_state(seed + 1000);
            let k = cs[0] * 3.0;
            let scaled = s.scaled(k);
            assert!((scaled.norm() - k.norm() * s.norm()).abs() < TOL);
        }
    }

    #[test]
    fn identity_leaves_state_unchanged() {
        let s = random_state(11);
        assert_eq!(apply_local_unitaries(&s, &LocalUnitary::identity()), s);
    }

    #[test]
    fn bit_flip_everywhere() {
        let x = LocalUnitary::new([Mat2::pauli_x(); 4]).unwrap();
        let out = apply_local_unitaries(&FourQubitState::basis(0), &x);
        assert_eq!(out, FourQubitState::basis(15));
    }

    #[test]
    fn single_slot_targets_the_right_bit() {
        let id = Mat2::identity();
        let x = Mat2::pauli_x();
        // slot order [U4, U3, U2, U1] acts on bits 3, 2, 1, 0
        for slot in 0..4 {
            let mut f = [id; 4];
            f[slot] = x;
            let out = apply_local_operators(&FourQubitState::basis(0), &f);
            assert_eq!(out, FourQubitState::basis(1 << (3 - slot)));
        }
    }

    #[test]
    fn non_unitary_factor_rejected() {
        let mut f = [Mat2::identity(); 4];
        f[2] = Mat2([[c(2.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(0.5, 0.0)]]);
        match LocalUnitary::new(f) {
            Err(StateError::NonUnitaryFactor { slot, .. }) => assert_eq!(slot, 2),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn random_unitaries_preserve_norm() {
        for seed in 0..100 {
            let s = random_state(seed);
            let u = LocalUnitary::random(seed);
            let checked = LocalUnitary::new(*u.factors()).unwrap();
            assert!((apply_local_unitaries(&s, &checked).norm() - 1.0).abs() < TOL);
        }
    }

    #[test]
    fn composition_matches_slotwise_product() {
        for seed in 0..30 {
            let s = random_state(seed);
            let u = LocalUnitary::random(2 * seed);
            let v = LocalUnitary::random(2 * seed + 1);
            let stepwise = apply_local_unitaries(&apply_local_unitaries(&s, &u), &v);
            let fused = apply_local_unitaries(&s, &u.then(&v));
            for k in 0..DIM {
                assert!((stepwise[k] - fused[k]).norm() < TOL);
            }
        }
    }

    #[test]
    fn random_state_is_deterministic_and_normalized() {
        assert_eq!(random_state(42), random_state(42));
        for seed in 0..100 {
            assert!((random_state(seed).norm() - 1.0).abs() < TOL);
        }
        let f = random_state(1).inner(&random_state(2)).norm();
        assert!(f < 1.0 - 1e-6);
    }

    #[test]
    fn random_su2_is_special_unitary() {
        for seed in 0..200 {
            let u = random_su2(seed);
            assert!((u.det() - c(1.0, 0.0)).norm() < TOL);
            assert!(u.unitarity_residual() < TOL);
        }
        assert_eq!(random_su2(9), random_su2(9));
    }
}
