//! Grid sweeps over `(t, α)` and oracle cross-validation.
//!
//! Grid points are independent, so evaluation maps them in parallel with
//! rayon when the `parallel` feature is on. Results always come back in grid
//! order (`t` outer, `α` inner) and are identical in both execution modes.

use crate::dynamics::{check_angle, evolved_state, Family, InitialStateSpec, ModelParams};
use crate::error::SweepError;
use crate::invariants::InvariantSet;
use crate::oracle::{extract_four_qubit, fidelity_up_to_phase, FockTruncation, JointEvolver};
use crate::state::FourQubitState;

/// Minimum oracle fidelity for a verification point to pass.
pub const FIDELITY_TOL: f64 = 1e-10;
/// Maximum invariant discrepancy (closed form vs oracle) for a point to pass.
pub const DISCREPANCY_TOL: f64 = 1e-10;
/// Maximum population outside the one-photon sector.
pub const LEAKAGE_TOL: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    /// Falls back to sequential when built without the `parallel` feature.
    #[default]
    Parallel,
}

/// Order-preserving map over a slice.
pub fn map_items<T, R, F>(items: &[T], exec: Execution, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    match exec {
        Execution::Sequential => items.iter().map(f).collect(),
        Execution::Parallel => parallel_map(items, f),
    }
}

#[cfg(feature = "parallel")]
fn parallel_map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    use rayon::prelude::*;
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
fn parallel_map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    items.iter().map(f).collect()
}

/// Invariants of many states.
pub fn invariants_batch(states: &[FourQubitState], exec: Execution) -> Vec<InvariantSet> {
    map_items(states, exec, InvariantSet::of)
}

/// Inclusive linearly spaced axis. A single step is a fixed value and needs
/// `start == stop`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Axis {
    pub start: f64,
    pub stop: f64,
    pub steps: usize,
}

impl Axis {
    pub fn new(start: f64, stop: f64, steps: usize) -> Self {
        Self { start, stop, steps }
    }

    pub fn fixed(value: f64) -> Self {
        Self {
            start: value,
            stop: value,
            steps: 1,
        }
    }

    pub fn validate(&self, name: &'static str) -> Result<(), SweepError> {
        let fixed = self.steps == 1 && self.start == self.stop;
        if self.steps >= 2 || fixed {
            Ok(())
        } else {
            Err(SweepError::Steps {
                name,
                steps: self.steps,
            })
        }
    }

    pub fn values(&self) -> Vec<f64> {
        if self.steps <= 1 {
            return vec![self.start];
        }
        let last = (self.steps - 1) as f64;
        (0..self.steps)
            .map(|i| {
                if i + 1 == self.steps {
                    self.stop
                } else {
                    self.start + (self.stop - self.start) * i as f64 / last
                }
            })
            .collect()
    }
}

/// Everything needed to evaluate one grid.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SweepSpec {
    pub family: Family,
    pub params: ModelParams,
    pub t: Axis,
    pub alpha: Axis,
    pub beta: f64,
    pub nmax: usize,
}

impl SweepSpec {
    pub fn validate(&self) -> Result<FockTruncation, SweepError> {
        self.params.validate()?;
        self.t.validate("t")?;
        self.alpha.validate("alpha")?;
        for a in [self.alpha.start, self.alpha.stop] {
            check_angle("alpha", a, std::f64::consts::FRAC_PI_2)?;
        }
        check_angle("beta", self.beta, std::f64::consts::PI)?;
        Ok(FockTruncation::new(self.nmax)?)
    }

    /// Grid points in emission order: `t` outer, `α` inner.
    pub fn points(&self) -> Vec<(f64, f64)> {
        let alphas = self.alpha.values();
        self.t
            .values()
            .into_iter()
            .flat_map(|t| alphas.iter().map(move |&a| (t, a)))
            .collect()
    }

    fn initial(&self, alpha: f64) -> InitialStateSpec {
        // The angle check already ran in `validate`; clamp away the boundary slack.
        let alpha = alpha.clamp(0.0, std::f64::consts::FRAC_PI_2);
        let beta = self.beta.clamp(0.0, std::f64::consts::PI);
        InitialStateSpec::new(self.family, alpha, beta).expect("validated angles")
    }
}

/// One evaluated grid point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SweepRow {
    pub t: f64,
    pub alpha: f64,
    pub beta: f64,
    pub invariants: InvariantSet,
    pub leakage: f64,
}

/// Invariants of the closed-form state at every grid point, with the oracle's
/// leakage out of the one-photon sector.
pub fn evaluate(spec: &SweepSpec, exec: Execution) -> Result<Vec<SweepRow>, SweepError> {
    let trunc = spec.validate()?;
    let evolver = JointEvolver::new(&spec.params, trunc);
    let points = spec.points();
    map_items(&points, exec, |&(t, alpha)| {
        let init = spec.initial(alpha);
        let state = evolved_state(&spec.params, &init, t);
        let (_, leakage) = extract_four_qubit(&evolver.evolve(&init, t))?;
        Ok(SweepRow {
            t,
            alpha: init.alpha,
            beta: init.beta,
            invariants: InvariantSet::of(&state),
            leakage,
        })
    })
    .into_iter()
    .collect()
}

/// Closed form vs oracle at one grid point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct VerifyRow {
    pub family: Family,
    pub t: f64,
    pub alpha: f64,
    pub beta: f64,
    pub fidelity: f64,
    pub max_invariant_discrepancy: f64,
    pub leakage: f64,
}

impl VerifyRow {
    pub fn passes(&self) -> bool {
        self.fidelity >= 1.0 - FIDELITY_TOL
            && self.max_invariant_discrepancy < DISCREPANCY_TOL
            && self.leakage < LEAKAGE_TOL
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerifyReport {
    pub rows: Vec<VerifyRow>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(VerifyRow::passes)
    }

    pub fn min_fidelity(&self) -> f64 {
        self.rows
            .iter()
            .map(|r| r.fidelity)
            .fold(f64::INFINITY, f64::min)
    }

    pub fn max_discrepancy(&self) -> f64 {
        self.rows
            .iter()
            .map(|r| r.max_invariant_discrepancy)
            .fold(0.0, f64::max)
    }

    pub fn max_leakage(&self) -> f64 {
        self.rows.iter().map(|r| r.leakage).fold(0.0, f64::max)
    }

    pub fn failures(&self) -> usize {
        self.rows.iter().filter(|r| !r.passes()).count()
    }
}

/// Compare the closed-form state with the oracle at every grid point, for
/// each requested family.
pub fn verify(
    spec: &SweepSpec,
    families: &[Family],
    exec: Execution,
) -> Result<VerifyReport, SweepError> {
    let trunc = spec.validate()?;
    let evolver = JointEvolver::new(&spec.params, trunc);
    let mut rows = Vec::new();
    for &family in families {
        let spec = SweepSpec { family, ..*spec };
        let points = spec.points();
        let chunk: Result<Vec<VerifyRow>, SweepError> = map_items(&points, exec, |&(t, alpha)| {
            let init = spec.initial(alpha);
            let closed = evolved_state(&spec.params, &init, t);
            let (oracle, leakage) = extract_four_qubit(&evolver.evolve(&init, t))?;
            let fidelity = fidelity_up_to_phase(&closed, &oracle)?;
            let discrepancy = invariant_discrepancy(&closed, &oracle);
            Ok(VerifyRow {
                family,
                t,
                alpha: init.alpha,
                beta: init.beta,
                fidelity,
                max_invariant_discrepancy: discrepancy,
                leakage,
            })
        })
        .into_iter()
        .collect();
        rows.extend(chunk?);
    }
    Ok(VerifyReport { rows })
}

/// Largest discrepancy between the invariants of two states.
///
/// The two states may differ by a global phase `e^{iθ}`, under which `I_k`
/// picks up `e^{i d_k θ}` (degrees 2, 4, 6, 4 and 12 for D4), so the phase is
/// removed before comparing.
pub fn invariant_discrepancy(reference: &FourQubitState, other: &FourQubitState) -> f64 {
    let overlap = reference.inner(other);
    let aligned = if overlap.norm() > 0.0 {
        other.scaled((overlap / overlap.norm()).conj())
    } else {
        *other
    };
    InvariantSet::of(reference).max_abs_diff(&InvariantSet::of(&aligned))
}
