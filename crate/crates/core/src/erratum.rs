//! Published closed-form expressions for the invariants of the evolved `Φ`
//! family, transcribed as printed, and their comparison against the
//! amplitude-level values.
//!
//! The printed expressions use `√g` where the coefficients give `g` (and
//! `Δ² + 4g` where they give `Δ² + 4g²`), carry stray `√(g_A g_B)` prefactors,
//! and the resonance `I2` has the wrong powers of `cos α` and the sines. Most
//! entries therefore coincide with the ground truth only at unit couplings.
//! Nothing here is used to compute results; it only feeds the verify report.

use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64 as C64;

use crate::dynamics::{
    closed_form_i1_phi, closed_form_i2_phi, closed_form_i3_phi, ModelParams, Subsystem,
};

/// Deviation above which a printed formula is reported as disagreeing.
pub const DEVIATION_TOL: f64 = 1e-9;

/// Parameter regime in which a printed formula claims to hold.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Regime {
    General,
    Resonance,
    /// Resonance with `g_A = 2 g_B`.
    ResonanceDoubleCoupling,
    /// Resonance with `g_A = g_B`.
    ResonanceEqualCouplings,
}

impl Regime {
    pub fn applies(&self, p: &ModelParams) -> bool {
        let close = |a: f64, b: f64| (a - b).abs() <= 1e-12 * a.abs().max(b.abs()).max(1.0);
        match self {
            Regime::General => true,
            Regime::Resonance => p.is_resonant(),
            Regime::ResonanceDoubleCoupling => p.is_resonant() && close(p.g_a, 2.0 * p.g_b),
            Regime::ResonanceEqualCouplings => p.is_resonant() && close(p.g_a, p.g_b),
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Regime::General => "general",
            Regime::Resonance => "resonance",
            Regime::ResonanceDoubleCoupling => "resonance, g_A = 2 g_B",
            Regime::ResonanceEqualCouplings => "resonance, g_A = g_B",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Quantity {
    I1,
    I2,
    I3,
}

impl Quantity {
    fn truth(&self, p: &ModelParams, alpha: f64, t: f64) -> C64 {
        match self {
            Quantity::I1 => closed_form_i1_phi(p, alpha, t),
            Quantity::I2 => closed_form_i2_phi(p, alpha, t),
            Quantity::I3 => closed_form_i3_phi(p, alpha, t),
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Quantity::I1 => "I1",
            Quantity::I2 => "I2",
            Quantity::I3 => "I3",
        }
    }
}

type Printed = fn(&ModelParams, f64, f64) -> C64;

/// One printed formula.
#[derive(Clone, Copy)]
pub struct ErratumEntry {
    pub name: &'static str,
    pub quantity: Quantity,
    pub regime: Regime,
    pub printed: Printed,
}

impl std::fmt::Debug for ErratumEntry {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ErratumEntry")
            .field("name", &self.name)
            .field("quantity", &self.quantity)
            .field("regime", &self.regime)
            .finish()
    }
}

fn phase(p: &ModelParams, mult: f64, t: f64) -> C64 {
    C64::from_polar(1.0, -mult * t * (p.nu_a + p.nu_b))
}

/// `(√(Δ² + 4g) cos(t√(Δ²/4 + g)) − iΔ sin(t√(Δ²/4 + g)))`, its sine factor and
/// its denominator `Δ² + 4g`, exactly as printed.
fn printed_pair_factors(p: &ModelParams, sub: Subsystem, t: f64) -> (C64, f64, f64) {
    let pair = p.pair(sub);
    let d = pair.detuning();
    let arg = t * (d * d / 4.0 + pair.g).sqrt();
    let denom = d * d + 4.0 * pair.g;
    let bracket = C64::new(denom.sqrt() * arg.cos(), -d * arg.sin());
    (bracket, arg.sin(), denom)
}

fn printed_general_i1(p: &ModelParams, alpha: f64, t: f64) -> C64 {
    let (ba, sa, da) = printed_pair_factors(p, Subsystem::A, t);
    let (bb, sb, db) = printed_pair_factors(p, Subsystem::B, t);
    -4.0 * p.g_a * p.g_b * phase(p, 2.0, t) / (da * db) * alpha.cos().powi(2) * sa * sb * ba * bb
}

fn printed_resonance_i1_product(p: &ModelParams, alpha: f64, t: f64) -> C64 {
    let (ra, rb) = (p.g_a.sqrt() * t, p.g_b.sqrt() * t);
    -phase(p, 2.0, t) * alpha.cos().powi(2) * ra.sin() * rb.sin() * ra.cos() * rb.cos()
}

fn printed_resonance_i1(p: &ModelParams, alpha: f64, t: f64) -> C64 {
    -0.25
        * (p.g_a * p.g_b).sqrt()
        * phase(p, 2.0, t)
        * alpha.cos().powi(2)
        * (2.0 * t * p.g_a.sqrt()).sin()
        * (2.0 * t * p.g_b.sqrt()).sin()
}

fn printed_double_coupling_i1(p: &ModelParams, alpha: f64, t: f64) -> C64 {
    -(2f64.sqrt() / 4.0)
        * p.g_b
        * phase(p, 2.0, t)
        * alpha.cos().powi(2)
        * (2.0 * t * (2.0 * p.g_b).sqrt()).sin()
        * (2.0 * t * p.g_b.sqrt()).sin()
}

fn printed_equal_couplings_i1(p: &ModelParams, alpha: f64, t: f64) -> C64 {
    -0.25 * p.g_b * phase(p, 2.0, t) * alpha.cos().powi(2) * (2.0 * t * p.g_b.sqrt()).sin().powi(2)
}

fn printed_general_i2(p: &ModelParams, alpha: f64, t: f64) -> C64 {
    let (ba, sa, da) = printed_pair_factors(p, Subsystem::A, t);
    let (bb, sb, db) = printed_pair_factors(p, Subsystem::B, t);
    16.0 * (p.g_a * p.g_b).powi(2) * phase(p, 4.0, t) / (da * da * db * db)
        * alpha.cos().powi(4)
        * (sa * sb).powi(2)
        * ba
        * ba
        * bb
        * bb
}

fn printed_resonance_i2(p: &ModelParams, alpha: f64, t: f64) -> C64 {
    -(1.0 / 16.0)
        * (p.g_a * p.g_b).sqrt()
        * phase(p, 4.0, t)
        * alpha.cos().powi(2)
        * (2.0 * t * p.g_a.sqrt()).sin()
        * (2.0 * t * p.g_b.sqrt()).sin()
}

fn printed_resonance_i3(p: &ModelParams, alpha: f64, t: f64) -> C64 {
    -(1.0 / 64.0)
        * (p.g_a * p.g_b).powf(1.5)
        * phase(p, 6.0, t)
        * alpha.cos().powi(6)
        * (2.0 * t * p.g_a.sqrt()).sin().powi(3)
        * (2.0 * t * p.g_b.sqrt()).sin().powi(3)
}

/// Every printed formula, in order of appearance.
pub const ERRATUM_TABLE: [ErratumEntry; 8] = [
    ErratumEntry {
        name: "I1 general detuning",
        quantity: Quantity::I1,
        regime: Regime::General,
        printed: printed_general_i1,
    },
    ErratumEntry {
        name: "I1 resonance, product form",
        quantity: Quantity::I1,
        regime: Regime::Resonance,
        printed: printed_resonance_i1_product,
    },
    ErratumEntry {
        name: "I1 resonance, double-angle form",
        quantity: Quantity::I1,
        regime: Regime::Resonance,
        printed: printed_resonance_i1,
    },
    ErratumEntry {
        name: "I1 with g_A = 2 g_B",
        quantity: Quantity::I1,
        regime: Regime::ResonanceDoubleCoupling,
        printed: printed_double_coupling_i1,
    },
    ErratumEntry {
        name: "I1 with g_A = g_B",
        quantity: Quantity::I1,
        regime: Regime::ResonanceEqualCouplings,
        printed: printed_equal_couplings_i1,
    },
    ErratumEntry {
        name: "I2 general detuning",
        quantity: Quantity::I2,
        regime: Regime::General,
        printed: printed_general_i2,
    },
    ErratumEntry {
        name: "I2 resonance",
        quantity: Quantity::I2,
        regime: Regime::Resonance,
        printed: printed_resonance_i2,
    },
    ErratumEntry {
        name: "I3 resonance",
        quantity: Quantity::I3,
        regime: Regime::Resonance,
        printed: printed_resonance_i3,
    },
];

/// Fixed parameter points every report is evaluated on.
pub fn frozen_parameter_points() -> Vec<(&'static str, ModelParams)> {
    let p = |nu_a, nu_b, da, db, ga, gb| {
        ModelParams::detuned(nu_a, nu_b, da, db, ga, gb).expect("valid frozen point")
    };
    vec![
        ("resonance g_A = g_B = 1", p(1.0, 1.0, 0.0, 0.0, 1.0, 1.0)),
        ("resonance g_A = g_B = 0.5", p(1.0, 1.0, 0.0, 0.0, 0.5, 0.5)),
        (
            "resonance g_A = 2, g_B = 1",
            p(1.0, 1.0, 0.0, 0.0, 2.0, 1.0),
        ),
        (
            "resonance g_A = 1.4, g_B = 0.7",
            p(1.0, 1.5, 0.0, 0.0, 1.4, 0.7),
        ),
        ("detuned 0.5/1.0, g = 1", p(1.0, 1.0, 0.5, 1.0, 1.0, 1.0)),
        (
            "detuned 0.5/1.0, g = 0.8/0.6",
            p(1.0, 1.0, 0.5, 1.0, 0.8, 0.6),
        ),
    ]
}

/// Printed-vs-ground-truth comparison of one entry at one parameter point.
#[derive(Clone, Debug)]
pub struct ErratumFinding {
    pub entry: ErratumEntry,
    pub point: String,
    pub params: ModelParams,
    pub max_deviation: f64,
    pub max_reference: f64,
}

impl ErratumFinding {
    pub fn deviates(&self) -> bool {
        self.max_deviation > DEVIATION_TOL
    }
}

/// Maximal `|printed − truth|` over `t ∈ [0, 2π]` and `α ∈ [0, π/2]`.
pub fn compare(entry: &ErratumEntry, params: &ModelParams) -> (f64, f64) {
    const T_STEPS: usize = 49;
    const A_STEPS: usize = 7;
    let mut dev: f64 = 0.0;
    let mut reference: f64 = 0.0;
    for i in 0..T_STEPS {
        let t = 2.0 * PI * i as f64 / (T_STEPS - 1) as f64;
        for j in 0..A_STEPS {
            let alpha = FRAC_PI_2 * j as f64 / (A_STEPS - 1) as f64;
            let truth = entry.quantity.truth(params, alpha, t);
            let printed = (entry.printed)(params, alpha, t);
            dev = dev.max((printed - truth).norm());
            reference = reference.max(truth.norm());
        }
    }
    (dev, reference)
}

/// Evaluate every entry on every frozen point (and on `extra`, if given) where
/// its regime applies.
pub fn erratum_report(extra: Option<(&str, &ModelParams)>) -> Vec<ErratumFinding> {
    let mut points: Vec<(String, ModelParams)> = frozen_parameter_points()
        .into_iter()
        .map(|(n, p)| (n.to_string(), p))
        .collect();
    if let Some((name, p)) = extra {
        points.push((name.to_string(), *p));
    }
    let mut out = Vec::new();
    for entry in ERRATUM_TABLE.iter() {
        for (name, p) in points.iter() {
            if entry.regime.applies(p) {
                let (max_deviation, max_reference) = compare(entry, p);
                out.push(ErratumFinding {
                    entry: *entry,
                    point: name.clone(),
                    params: *p,
                    max_deviation,
                    max_reference,
                });
            }
        }
    }
    out
}
