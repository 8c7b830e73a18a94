use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum StateError {
    #[error("cannot normalize: all amplitudes vanish")]
    ZeroVector,
    #[error("amplitude {index} is not finite")]
    NonFinite { index: usize },
    #[error("local factor on slot U{slot} is not unitary (residual {residual:.3e})")]
    NonUnitaryFactor { slot: usize, residual: f64 },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParamError {
    #[error("coupling {name} must be positive and finite, got {value}")]
    Coupling { name: &'static str, value: f64 },
    #[error("parameter {name} must be finite, got {value}")]
    NonFinite { name: &'static str, value: f64 },
    #[error("{name} = {value} lies outside [{lo}, {hi}]")]
    AngleRange {
        name: &'static str,
        value: f64,
        lo: f64,
        hi: f64,
    },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OracleError {
    #[error("Fock truncation must keep at least two photon levels, got {0}")]
    Truncation(usize),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("excitation number must be at least 1")]
    ExcitationNumber,
    #[error("state norm {norm} deviates from 1")]
    NotNormalized { norm: f64 },
    #[error(transparent)]
    State(#[from] StateError),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SweepError {
    #[error("axis {name}: {steps} steps (a swept axis needs at least 2)")]
    Steps { name: &'static str, steps: usize },
    #[error(transparent)]
    Param(#[from] ParamError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}
