//! Reference evolution on a truncated Fock space.
//!
//! Each atom-cavity pair lives on `{↓, ↑} ⊗ {|0⟩ … |nmax−1⟩}` with basis index
//! `s·nmax + n` (atom level major, `↓ = 0`). The Jaynes-Cummings Hamiltonian is
//! assembled entry by entry and exponentiated through its Hermitian
//! eigendecomposition, so this path shares nothing with the closed-form
//! coefficients in [`crate::dynamics`].

use nalgebra::{DMatrix, DVector, SymmetricEigen};
use num_complex::Complex64 as C64;

use crate::dynamics::{InitialStateSpec, ModelParams, Subsystem};
use crate::error::OracleError;
use crate::state::{FourQubitState, DIM};

/// Allowed deviation of a state norm from 1 before fidelity is refused.
pub const NORMALIZATION_TOL: f64 = 1e-8;

/// Photon numbers `0..nmax` are kept per cavity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FockTruncation {
    nmax: usize,
}

impl FockTruncation {
    pub fn new(nmax: usize) -> Result<Self, OracleError> {
        if nmax < 2 {
            return Err(OracleError::Truncation(nmax));
        }
        Ok(Self { nmax })
    }

    pub fn nmax(&self) -> usize {
        self.nmax
    }

    /// Dimension of one atom-cavity pair.
    pub fn pair_dim(&self) -> usize {
        2 * self.nmax
    }

    pub fn index(&self, atom_up: bool, photons: usize) -> usize {
        debug_assert!(photons < self.nmax);
        usize::from(atom_up) * self.nmax + photons
    }
}

impl Default for FockTruncation {
    fn default() -> Self {
        Self { nmax: 2 }
    }
}

/// Dense Hamiltonian of one atom-cavity pair.
#[derive(Clone, Debug, PartialEq)]
pub struct SubsystemHamiltonian {
    matrix: DMatrix<C64>,
    trunc: FockTruncation,
}

impl SubsystemHamiltonian {
    pub fn matrix(&self) -> &DMatrix<C64> {
        &self.matrix
    }

    pub fn truncation(&self) -> FockTruncation {
        self.trunc
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    /// Largest entrywise `|H − H†|`.
    pub fn hermiticity_residual(&self) -> f64 {
        let d = &self.matrix - self.matrix.adjoint();
        d.iter().map(|x| x.norm()).fold(0.0, f64::max)
    }
}

/// `H = ν(a†a + ½) + (ω/2)σz + g(a†σ− + aσ+)` on the truncated pair space.
pub fn build_hamiltonian(
    params: &ModelParams,
    sub: Subsystem,
    trunc: FockTruncation,
) -> SubsystemHamiltonian {
    let p = params.pair(sub);
    let dim = trunc.pair_dim();
    let mut h = DMatrix::<C64>::zeros(dim, dim);
    for n in 0..trunc.nmax {
        let field = p.nu * (n as f64 + 0.5);
        h[(trunc.index(false, n), trunc.index(false, n))] = C64::new(field - 0.5 * p.omega, 0.0);
        h[(trunc.index(true, n), trunc.index(true, n))] = C64::new(field + 0.5 * p.omega, 0.0);
    }
    for n in 0..trunc.nmax - 1 {
        // ⟨↓, n+1| a†σ− |↑, n⟩ = √(n+1)
        let x = C64::new(p.g * ((n + 1) as f64).sqrt(), 0.0);
        let (lo, up) = (trunc.index(false, n + 1), trunc.index(true, n));
        h[(lo, up)] = x;
        h[(up, lo)] = x.conj();
    }
    SubsystemHamiltonian { matrix: h, trunc }
}

/// Excitation number `a†a + (σz + 1)/2`, diagonal in the pair basis.
pub fn excitation_number(trunc: FockTruncation) -> DMatrix<C64> {
    let dim = trunc.pair_dim();
    let mut m = DMatrix::<C64>::zeros(dim, dim);
    for n in 0..trunc.nmax {
        m[(trunc.index(false, n), trunc.index(false, n))] = C64::new(n as f64, 0.0);
        m[(trunc.index(true, n), trunc.index(true, n))] = C64::new((n + 1) as f64, 0.0);
    }
    m
}

/// Dressed-doublet frequency `Ω_n = √(g² n + Δ²/4)` of the `n`-excitation block.
pub fn block_rabi(params: &ModelParams, sub: Subsystem, n: usize) -> Result<f64, OracleError> {
    if n == 0 {
        return Err(OracleError::ExcitationNumber);
    }
    let p = params.pair(sub);
    let d = p.detuning();
    Ok((p.g * p.g * n as f64 + d * d / 4.0).sqrt())
}

/// `exp(−iHt)` from a cached eigendecomposition `H = V Λ V†`.
#[derive(Clone, Debug)]
pub struct Propagator {
    eigenvalues: Vec<f64>,
    eigenvectors: DMatrix<C64>,
}

impl Propagator {
    pub fn new(h: &SubsystemHamiltonian) -> Self {
        let eig = SymmetricEigen::new(h.matrix.clone());
        Self {
            eigenvalues: eig.eigenvalues.iter().copied().collect(),
            eigenvectors: eig.eigenvectors,
        }
    }

    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    /// The full unitary `U(t)`.
    pub fn unitary(&self, t: f64) -> DMatrix<C64> {
        let v = &self.eigenvectors;
        let mut scaled = v.clone();
        for (j, &lam) in self.eigenvalues.iter().enumerate() {
            let phase = C64::from_polar(1.0, -lam * t);
            scaled.column_mut(j).iter_mut().for_each(|x| *x *= phase);
        }
        scaled * v.adjoint()
    }

    pub fn apply(&self, t: f64, state: &DVector<C64>) -> Result<DVector<C64>, OracleError> {
        if state.len() != self.dim() {
            return Err(OracleError::DimensionMismatch {
                expected: self.dim(),
                got: state.len(),
            });
        }
        let mut coords = self.eigenvectors.adjoint() * state;
        for (c, &lam) in coords.iter_mut().zip(self.eigenvalues.iter()) {
            *c *= C64::from_polar(1.0, -lam * t);
        }
        Ok(&self.eigenvectors * coords)
    }
}

/// One-shot `exp(−iHt)|state⟩`.
pub fn evolve(
    h: &SubsystemHamiltonian,
    t: f64,
    state: &DVector<C64>,
) -> Result<DVector<C64>, OracleError> {
    Propagator::new(h).apply(t, state)
}

/// State of both pairs, stored as a `pair_dim × pair_dim` coefficient matrix
/// `M[(i_A, i_B)]`; the flat tensor order is `(atom A ⊗ cavity a) ⊗ (atom B ⊗ cavity b)`.
#[derive(Clone, Debug, PartialEq)]
pub struct JointFockState {
    coeffs: DMatrix<C64>,
    trunc: FockTruncation,
}

impl JointFockState {
    /// Atomic state with both cavities in vacuum.
    pub fn embed(init: &InitialStateSpec, trunc: FockTruncation) -> Self {
        let dim = trunc.pair_dim();
        let mut coeffs = DMatrix::<C64>::zeros(dim, dim);
        for (k, amp) in init.atomic_amplitudes().into_iter().enumerate() {
            let (up_a, up_b) = (k & 2 != 0, k & 1 != 0);
            coeffs[(trunc.index(up_a, 0), trunc.index(up_b, 0))] = amp;
        }
        Self { coeffs, trunc }
    }

    pub fn from_flat(amps: &[C64], trunc: FockTruncation) -> Result<Self, OracleError> {
        let dim = trunc.pair_dim();
        if amps.len() != dim * dim {
            return Err(OracleError::DimensionMismatch {
                expected: dim * dim,
                got: amps.len(),
            });
        }
        Ok(Self {
            coeffs: DMatrix::from_row_slice(dim, dim, amps),
            trunc,
        })
    }

    pub fn truncation(&self) -> FockTruncation {
        self.trunc
    }

    /// Amplitude of `|s_A, n_a⟩ ⊗ |s_B, n_b⟩`.
    pub fn amplitude(&self, up_a: bool, n_a: usize, up_b: bool, n_b: usize) -> C64 {
        self.coeffs[(self.trunc.index(up_a, n_a), self.trunc.index(up_b, n_b))]
    }

    /// Flat vector in tensor order (row-major over the coefficient matrix).
    pub fn to_flat(&self) -> Vec<C64> {
        let dim = self.trunc.pair_dim();
        (0..dim)
            .flat_map(|i| (0..dim).map(move |j| (i, j)))
            .map(|ij| self.coeffs[ij])
            .collect()
    }

    pub fn norm(&self) -> f64 {
        self.coeffs.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt()
    }

    /// `(U_A ⊗ U_B)` acting as `U_A M U_Bᵀ`.
    pub fn evolved(&self, ua: &DMatrix<C64>, ub: &DMatrix<C64>) -> Self {
        Self {
            coeffs: ua * &self.coeffs * ub.transpose(),
            trunc: self.trunc,
        }
    }

    /// `⟨H_A ⊗ 1 + 1 ⊗ H_B⟩`.
    pub fn energy(&self, ha: &SubsystemHamiltonian, hb: &SubsystemHamiltonian) -> f64 {
        let hm = ha.matrix() * &self.coeffs + &self.coeffs * hb.matrix().transpose();
        self.coeffs
            .iter()
            .zip(hm.iter())
            .map(|(c, x)| (c.conj() * x).re)
            .sum()
    }
}

/// Cached propagators for both pairs at fixed parameters and truncation.
///
/// Immutable once built, so one instance can serve a whole parallel sweep.
#[derive(Clone, Debug)]
pub struct JointEvolver {
    trunc: FockTruncation,
    ha: SubsystemHamiltonian,
    hb: SubsystemHamiltonian,
    pa: Propagator,
    pb: Propagator,
}

impl JointEvolver {
    pub fn new(params: &ModelParams, trunc: FockTruncation) -> Self {
        let ha = build_hamiltonian(params, Subsystem::A, trunc);
        let hb = build_hamiltonian(params, Subsystem::B, trunc);
        let pa = Propagator::new(&ha);
        let pb = Propagator::new(&hb);
        Self {
            trunc,
            ha,
            hb,
            pa,
            pb,
        }
    }

    pub fn truncation(&self) -> FockTruncation {
        self.trunc
    }

    pub fn hamiltonians(&self) -> (&SubsystemHamiltonian, &SubsystemHamiltonian) {
        (&self.ha, &self.hb)
    }

    pub fn evolve(&self, init: &InitialStateSpec, t: f64) -> JointFockState {
        self.evolve_state(&JointFockState::embed(init, self.trunc), t)
    }

    pub fn evolve_state(&self, state: &JointFockState, t: f64) -> JointFockState {
        state.evolved(&self.pa.unitary(t), &self.pb.unitary(t))
    }
}

pub fn evolve_joint(
    params: &ModelParams,
    trunc: FockTruncation,
    init: &InitialStateSpec,
    t: f64,
) -> JointFockState {
    JointEvolver::new(params, trunc).evolve(init, t)
}

/// Project onto photon numbers `{0, 1}` per cavity, map to the four-qubit index
/// `(s_A, s_B, n_a, n_b)` and renormalize. Also returns the discarded population.
pub fn extract_four_qubit(joint: &JointFockState) -> Result<(FourQubitState, f64), OracleError> {
    let mut amps = [C64::new(0.0, 0.0); DIM];
    for (k, amp) in amps.iter_mut().enumerate() {
        let (sa, sb, na, nb) = (k & 8 != 0, k & 4 != 0, (k >> 1) & 1, k & 1);
        *amp = joint.amplitude(sa, na, sb, nb);
    }
    let total: f64 = joint.coeffs.iter().map(|x| x.norm_sqr()).sum();
    let kept: f64 = amps.iter().map(|x| x.norm_sqr()).sum();
    let leakage = (total - kept).max(0.0);
    let state = FourQubitState::new(amps, true)?;
    Ok((state, leakage))
}

/// `|⟨s1|s2⟩|` for unit states; equals 1 iff they agree up to a global phase.
pub fn fidelity_up_to_phase(s1: &FourQubitState, s2: &FourQubitState) -> Result<f64, OracleError> {
    for s in [s1, s2] {
        let norm = s.norm();
        if (norm - 1.0).abs() > NORMALIZATION_TOL {
            return Err(OracleError::NotNormalized { norm });
        }
    }
    Ok(s1.inner(s2).norm().min(1.0))
}
