//! Exact time evolution of two independent atom-cavity pairs in the
//! one-excitation sector.
//!
//! Each pair is a Jaynes-Cummings system `H = ν(a†a + ½) + (ω/2)σz + g(a†σ− + aσ+)`
//! evolved with `U = exp(−iHt)`. Starting from an atomic state with both
//! cavities empty, every amplitude of the four-qubit state is a product of the
//! per-pair coefficients
//!
//! ```text
//! f(t) = e^{−iνt} (cos Ωt − i (Δ/2) sin(Ωt)/Ω)    ⟨↑,0|U|↑,0⟩
//! g(t) = −i g e^{−iνt} sin(Ωt)/Ω                  ⟨↓,1|U|↑,0⟩
//! h(t) = e^{+iΔt/2}                               ⟨↓,0|U|↓,0⟩
//! ```
//!
//! with detuning `Δ = ω − ν` and Rabi frequency `Ω = √(g² + Δ²/4)`.

use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64 as C64;

use crate::error::ParamError;
use crate::invariants::InvariantSet;
use crate::state::{FourQubitState, DIM};

/// Below this value of `|Ωt|`, `sin(Ωt)/Ω` is evaluated from its Taylor series.
const SINC_SERIES_BELOW: f64 = 1e-8;

/// Slack allowed on the angle domain boundaries.
pub const ANGLE_SLACK: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Subsystem {
    A,
    B,
}

/// Frequencies and couplings of both atom-cavity pairs, in radians per unit time.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ModelParams {
    pub nu_a: f64,
    pub nu_b: f64,
    pub omega_a: f64,
    pub omega_b: f64,
    pub g_a: f64,
    pub g_b: f64,
}

/// Parameters of one pair.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PairParams {
    pub nu: f64,
    pub omega: f64,
    pub g: f64,
}

impl PairParams {
    pub fn detuning(&self) -> f64 {
        self.omega - self.nu
    }

    pub fn rabi(&self) -> f64 {
        let d = self.detuning();
        (self.g * self.g + d * d / 4.0).sqrt()
    }
}

impl ModelParams {
    pub fn new(
        nu_a: f64,
        nu_b: f64,
        omega_a: f64,
        omega_b: f64,
        g_a: f64,
        g_b: f64,
    ) -> Result<Self, ParamError> {
        let p = Self {
            nu_a,
            nu_b,
            omega_a,
            omega_b,
            g_a,
            g_b,
        };
        p.validate()?;
        Ok(p)
    }

    /// Both pairs on resonance (`ω = ν`).
    pub fn resonant(nu_a: f64, nu_b: f64, g_a: f64, g_b: f64) -> Result<Self, ParamError> {
        Self::new(nu_a, nu_b, nu_a, nu_b, g_a, g_b)
    }

    /// Pairs with prescribed detunings `Δ_A`, `Δ_B` around the field frequencies.
    pub fn detuned(
        nu_a: f64,
        nu_b: f64,
        delta_a: f64,
        delta_b: f64,
        g_a: f64,
        g_b: f64,
    ) -> Result<Self, ParamError> {
        Self::new(nu_a, nu_b, nu_a + delta_a, nu_b + delta_b, g_a, g_b)
    }

    pub fn validate(&self) -> Result<(), ParamError> {
        for (name, value) in [
            ("nu_a", self.nu_a),
            ("nu_b", self.nu_b),
            ("omega_a", self.omega_a),
            ("omega_b", self.omega_b),
        ] {
            if !value.is_finite() {
                return Err(ParamError::NonFinite { name, value });
            }
        }
        for (name, value) in [("g_a", self.g_a), ("g_b", self.g_b)] {
            if !(value.is_finite() && value > 0.0) {
                return Err(ParamError::Coupling { name, value });
            }
        }
        Ok(())
    }

    pub fn pair(&self, sub: Subsystem) -> PairParams {
        match sub {
            Subsystem::A => PairParams {
                nu: self.nu_a,
                omega: self.omega_a,
                g: self.g_a,
            },
            Subsystem::B => PairParams {
                nu: self.nu_b,
                omega: self.omega_b,
                g: self.g_b,
            },
        }
    }

    pub fn detuning(&self, sub: Subsystem) -> f64 {
        self.pair(sub).detuning()
    }

    pub fn rabi(&self, sub: Subsystem) -> f64 {
        self.pair(sub).rabi()
    }

    pub fn is_resonant(&self) -> bool {
        self.detuning(Subsystem::A) == 0.0 && self.detuning(Subsystem::B) == 0.0
    }
}

impl Default for ModelParams {
    /// Resonant pairs with unit field frequencies and couplings.
    fn default() -> Self {
        Self {
            nu_a: 1.0,
            nu_b: 1.0,
            omega_a: 1.0,
            omega_b: 1.0,
            g_a: 1.0,
            g_b: 1.0,
        }
    }
}

/// Which atomic initial state the cavities start from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// `cos α |↑↑⟩ + e^{iβ} sin α |↓↓⟩`
    Phi,
    /// `cos α |↑↓⟩ + e^{iβ} sin α |↓↑⟩`
    Psi,
}

/// Initial atomic state with `α ∈ [0, π/2]` and `β ∈ [0, π]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct InitialStateSpec {
    pub family: Family,
    pub alpha: f64,
    pub beta: f64,
}

impl InitialStateSpec {
    pub fn new(family: Family, alpha: f64, beta: f64) -> Result<Self, ParamError> {
        check_angle("alpha", alpha, FRAC_PI_2)?;
        check_angle("beta", beta, PI)?;
        Ok(Self {
            family,
            alpha,
            beta,
        })
    }

    /// Atomic amplitudes `[↓↓, ↓↑, ↑↓, ↑↑]` (index `2·s_A + s_B`).
    pub fn atomic_amplitudes(&self) -> [C64; 4] {
        let cos = C64::new(self.alpha.cos(), 0.0);
        let sin = C64::from_polar(self.alpha.sin(), self.beta);
        let zero = C64::new(0.0, 0.0);
        match self.family {
            Family::Phi => [sin, zero, zero, cos],
            Family::Psi => [zero, sin, cos, zero],
        }
    }
}

pub(crate) fn check_angle(name: &'static str, value: f64, hi: f64) -> Result<(), ParamError> {
    if value.is_finite() && value >= -ANGLE_SLACK && value <= hi + ANGLE_SLACK {
        Ok(())
    } else {
        Err(ParamError::AngleRange {
            name,
            value,
            lo: 0.0,
            hi,
        })
    }
}

/// Propagator matrix elements of one pair at one time.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct JcCoefficients {
    pub f: C64,
    pub g: C64,
    pub h: C64,
}

/// `sin(Ωt)/Ω`, continuous through `Ω → 0`.
fn sin_over(omega: f64, t: f64) -> f64 {
    let x = omega * t;
    if x.abs() < SINC_SERIES_BELOW {
        t * (1.0 - x * x / 6.0)
    } else {
        x.sin() / omega
    }
}

pub fn coefficients(params: &ModelParams, sub: Subsystem, t: f64) -> JcCoefficients {
    let p = params.pair(sub);
    let delta = p.detuning();
    let phase = C64::from_polar(1.0, -p.nu * t);
    let (f, g) = if delta == 0.0 {
        let (s, c) = (p.g * t).sin_cos();
        (phase * c, C64::new(0.0, -s) * phase)
    } else {
        let omega = p.rabi();
        let so = sin_over(omega, t);
        let f = phase * C64::new((omega * t).cos(), -0.5 * delta * so);
        let g = phase * C64::new(0.0, -p.g * so);
        (f, g)
    };
    let h = C64::from_polar(1.0, 0.5 * delta * t);
    JcCoefficients { f, g, h }
}

/// Four-qubit amplitudes of the evolved `Φ` family.
///
/// Support: `|↓↓00⟩ = h_A h_B e^{iβ} sin α`, `|↓↓11⟩ = g_A g_B cos α`,
/// `|↓↑10⟩ = g_A f_B cos α`, `|↑↓01⟩ = f_A g_B cos α`, `|↑↑00⟩ = f_A f_B cos α`.
pub fn phi_amplitudes(
    ca: &JcCoefficients,
    cb: &JcCoefficients,
    alpha: f64,
    beta: f64,
) -> [C64; DIM] {
    let cos = alpha.cos();
    let sin = C64::from_polar(alpha.sin(), beta);
    let mut amps = [C64::new(0.0, 0.0); DIM];
    amps[0b0000] = ca.h * cb.h * sin;
    amps[0b0011] = ca.g * cb.g * cos;
    amps[0b0110] = ca.g * cb.f * cos;
    amps[0b1001] = ca.f * cb.g * cos;
    amps[0b1100] = ca.f * cb.f * cos;
    amps
}

/// Four-qubit amplitudes of the evolved `Ψ` family.
///
/// Support: `|↓↓01⟩ = h_A g_B e^{iβ} sin α`, `|↓↓10⟩ = g_A h_B cos α`,
/// `|↓↑00⟩ = h_A f_B e^{iβ} sin α`, `|↑↓00⟩ = f_A h_B cos α`.
pub fn psi_amplitudes(
    ca: &JcCoefficients,
    cb: &JcCoefficients,
    alpha: f64,
    beta: f64,
) -> [C64; DIM] {
    let cos = alpha.cos();
    let sin = C64::from_polar(alpha.sin(), beta);
    let mut amps = [C64::new(0.0, 0.0); DIM];
    amps[0b0001] = ca.h * cb.g * sin;
    amps[0b0010] = ca.g * cb.h * cos;
    amps[0b0100] = ca.h * cb.f * sin;
    amps[0b1000] = ca.f * cb.h * cos;
    amps
}

fn unchecked(amps: [C64; DIM]) -> FourQubitState {
    FourQubitState::new(amps, false).expect("closed-form amplitudes are finite")
}

pub fn phi_state(params: &ModelParams, alpha: f64, beta: f64, t: f64) -> FourQubitState {
    let ca = coefficients(params, Subsystem::A, t);
    let cb = coefficients(params, Subsystem::B, t);
    unchecked(phi_amplitudes(&ca, &cb, alpha, beta))
}

pub fn psi_state(params: &ModelParams, alpha: f64, beta: f64, t: f64) -> FourQubitState {
    let ca = coefficients(params, Subsystem::A, t);
    let cb = coefficients(params, Subsystem::B, t);
    unchecked(psi_amplitudes(&ca, &cb, alpha, beta))
}

/// Closed-form evolved state for either family.
pub fn evolved_state(params: &ModelParams, init: &InitialStateSpec, t: f64) -> FourQubitState {
    match init.family {
        Family::Phi => phi_state(params, init.alpha, init.beta, t),
        Family::Psi => psi_state(params, init.alpha, init.beta, t),
    }
}

/// The two degree-2 products that drive all invariants of the `Φ` family:
/// `x = Υ1001 Υ0110` and `y = Υ1100 Υ0011`.
fn phi_products(params: &ModelParams, alpha: f64, t: f64) -> (C64, C64) {
    let ca = coefficients(params, Subsystem::A, t);
    let cb = coefficients(params, Subsystem::B, t);
    let cos2 = alpha.cos().powi(2);
    let x = (ca.f * cb.g) * (ca.g * cb.f) * cos2;
    let y = (ca.f * cb.f) * (ca.g * cb.g) * cos2;
    (x, y)
}

/// `I1(Φ′(t)) = ½(Υ0011 Υ1100 + Υ0110 Υ1001)`.
pub fn closed_form_i1_phi(params: &ModelParams, alpha: f64, t: f64) -> C64 {
    let (x, y) = phi_products(params, alpha, t);
    0.5 * (x + y)
}

/// `I2(Φ′(t)) = (1/6)(x² + 4xy + y²)`.
pub fn closed_form_i2_phi(params: &ModelParams, alpha: f64, t: f64) -> C64 {
    let (x, y) = phi_products(params, alpha, t);
    (x * x + 4.0 * x * y + y * y) / 6.0
}

/// `I3(Φ′(t)) = ½ xy (x + y)`.
pub fn closed_form_i3_phi(params: &ModelParams, alpha: f64, t: f64) -> C64 {
    let (x, y) = phi_products(params, alpha, t);
    0.5 * x * y * (x + y)
}

/// `I4(Φ′(t)) = xy`.
pub fn closed_form_i4_phi(params: &ModelParams, alpha: f64, t: f64) -> C64 {
    let (x, y) = phi_products(params, alpha, t);
    x * y
}

/// `I1(Φ′(t))` at exact resonance: `−¼ e^{−2it(ν_A+ν_B)} cos²α sin(2g_A t) sin(2g_B t)`.
pub fn resonance_i1_phi(nu_a: f64, nu_b: f64, g_a: f64, g_b: f64, alpha: f64, t: f64) -> C64 {
    -0.25
        * C64::from_polar(1.0, -2.0 * t * (nu_a + nu_b))
        * alpha.cos().powi(2)
        * (2.0 * g_a * t).sin()
        * (2.0 * g_b * t).sin()
}

/// `cos α |0000⟩ + e^{iβ} sin α |1111⟩`.
pub fn ghz_family_state(alpha: f64, beta: f64) -> FourQubitState {
    let mut amps = [C64::new(0.0, 0.0); DIM];
    amps[0] = C64::new(alpha.cos(), 0.0);
    amps[15] = C64::from_polar(alpha.sin(), beta);
    unchecked(amps)
}

/// Analytic invariants of [`ghz_family_state`]:
/// `I1 = ½ e^{iβ} cos α sin α`, `I2 = (1/24) e^{2iβ} sin²2α`, `I3 = I4 = 0`,
/// `τ4 = sin²2α`.
pub fn ghz_family_reference(alpha: f64, beta: f64) -> InvariantSet {
    let (s, c) = alpha.sin_cos();
    let s2 = (2.0 * alpha).sin().powi(2);
    let i1 = C64::from_polar(0.5 * c * s, beta);
    let i2 = C64::from_polar(s2 / 24.0, 2.0 * beta);
    let zero = C64::new(0.0, 0.0);
    InvariantSet::from_parts(i1, i2, zero, zero, s2)
}
