//! Double Jaynes-Cummings dynamics and four-qubit SLOCC invariants.
//!
//! Two atom-cavity pairs evolve independently from an entangled atomic state
//! with empty cavities. The crate builds the evolved four-qubit states in
//! closed form ([`dynamics`]), evaluates the polynomial invariants `I1..I4`,
//! the four-determinant `D4` and the four-tangle `τ4` ([`invariants`]), and
//! checks the closed forms against a direct truncated-Fock-space evolution
//! ([`oracle`]). [`sweep`] runs both over parameter grids.

pub mod dynamics;
pub mod erratum;
pub mod error;
pub mod invariants;
pub mod oracle;
pub mod state;
pub mod sweep;

pub use num_complex::Complex64 as C64;

pub use dynamics::{
    closed_form_i1_phi, closed_form_i2_phi, closed_form_i3_phi, closed_form_i4_phi, coefficients,
    evolved_state, ghz_family_reference, ghz_family_state, phi_state, psi_state, Family,
    InitialStateSpec, JcCoefficients, ModelParams, Subsystem,
};
pub use error::{OracleError, ParamError, StateError, SweepError};
pub use invariants::{
    blocks, covectors, dot_g, four_determinant, four_tangle, invariant_i1, invariant_i2_plucker,
    invariant_i2_wedge, invariant_i3, invariant_i4, BlockDecomposition, CovectorQuad,
    FourDeterminant, InvariantSet,
};
pub use oracle::{
    block_rabi, build_hamiltonian, evolve, evolve_joint, extract_four_qubit, fidelity_up_to_phase,
    FockTruncation, JointEvolver, JointFockState, SubsystemHamiltonian,
};
pub use state::{
    apply_local_operators, apply_local_unitaries, make_state, random_state, random_su2,
    FourQubitState, LocalUnitary, Mat2,
};
pub use sweep::{
    evaluate, invariants_batch, verify, Axis, Execution, SweepRow, SweepSpec, VerifyReport,
    VerifyRow,
};
