//! Sweep settings: built-in defaults, then an optional TOML file, then
//! command-line flags. Keys in the file use the flag names (`g-a = 0.7`).

use std::f64::consts::{FRAC_PI_2, PI};
use std::path::Path;

use clap::{Args, ValueEnum};
use djc::{Axis, Family, ModelParams, SweepSpec};
use serde::Deserialize;

use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyName {
    Phi,
    Psi,
}

impl From<FamilyName> for Family {
    fn from(f: FamilyName) -> Self {
        match f {
            FamilyName::Phi => Family::Phi,
            FamilyName::Psi => Family::Psi,
        }
    }
}

/// Every sweep setting, each optional so layers can be stacked.
#[derive(Clone, Debug, Default, PartialEq, Args, Deserialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
pub struct Settings {
    /// Initial-state family
    #[arg(long, value_enum)]
    pub family: Option<FamilyName>,
    /// Cavity A frequency
    #[arg(long)]
    pub nu_a: Option<f64>,
    /// Cavity B frequency
    #[arg(long)]
    pub nu_b: Option<f64>,
    /// Atom A transition frequency (defaults to nu-a, i.e. resonance)
    #[arg(long)]
    pub omega_a: Option<f64>,
    /// Atom B transition frequency (defaults to nu-b)
    #[arg(long)]
    pub omega_b: Option<f64>,
    /// Atom-cavity coupling of pair A
    #[arg(long)]
    pub g_a: Option<f64>,
    /// Atom-cavity coupling of pair B
    #[arg(long)]
    pub g_b: Option<f64>,
    /// Fixed mixing angle, in place of an alpha range
    #[arg(long, conflicts_with_all = ["alpha_start", "alpha_stop", "alpha_steps"])]
    pub alpha: Option<f64>,
    #[arg(long)]
    pub alpha_start: Option<f64>,
    #[arg(long)]
    pub alpha_stop: Option<f64>,
    #[arg(long)]
    pub alpha_steps: Option<usize>,
    /// Relative phase of the initial superposition
    #[arg(long)]
    pub beta: Option<f64>,
    #[arg(long)]
    pub t_start: Option<f64>,
    #[arg(long)]
    pub t_stop: Option<f64>,
    #[arg(long)]
    pub t_steps: Option<usize>,
    /// Photon-number cutoff of the evolution oracle
    #[arg(long)]
    pub nmax: Option<usize>,
}

/// Grid sizes used when neither file nor flags give one.
#[derive(Clone, Copy, Debug)]
pub struct GridDefaults {
    pub t_steps: usize,
    pub alpha_steps: usize,
}

pub const SURFACE_GRID: GridDefaults = GridDefaults {
    t_steps: 101,
    alpha_steps: 31,
};
pub const VERIFY_GRID: GridDefaults = GridDefaults {
    t_steps: 25,
    alpha_steps: 7,
};

impl Settings {
    pub fn from_toml(text: &str, path: &Path) -> Result<Self, CliError> {
        let s: Settings = toml::from_str(text).map_err(|e| CliError::Config {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
        if s.alpha.is_some() && s.has_alpha_range() {
            return Err(CliError::Config {
                path: path.display().to_string(),
                message:
                    "`alpha` cannot be combined with `alpha-start`, `alpha-stop` or `alpha-steps`"
                        .into(),
            });
        }
        Ok(s)
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(CliError::io(path))?;
        Self::from_toml(&text, path)
    }

    fn has_alpha_range(&self) -> bool {
        self.alpha_start.is_some() || self.alpha_stop.is_some() || self.alpha_steps.is_some()
    }

    /// `upper` wins key by key. A fixed `alpha` and an alpha range replace
    /// each other as a whole.
    pub fn overlay(mut self, upper: Settings) -> Settings {
        if upper.alpha.is_some() {
            self.alpha_start = None;
            self.alpha_stop = None;
            self.alpha_steps = None;
        }
        if upper.has_alpha_range() {
            self.alpha = None;
        }
        Settings {
            family: upper.family.or(self.family),
            nu_a: upper.nu_a.or(self.nu_a),
            nu_b: upper.nu_b.or(self.nu_b),
            omega_a: upper.omega_a.or(self.omega_a),
            omega_b: upper.omega_b.or(self.omega_b),
            g_a: upper.g_a.or(self.g_a),
            g_b: upper.g_b.or(self.g_b),
            alpha: upper.alpha.or(self.alpha),
            alpha_start: upper.alpha_start.or(self.alpha_start),
            alpha_stop: upper.alpha_stop.or(self.alpha_stop),
            alpha_steps: upper.alpha_steps.or(self.alpha_steps),
            beta: upper.beta.or(self.beta),
            t_start: upper.t_start.or(self.t_start),
            t_stop: upper.t_stop.or(self.t_stop),
            t_steps: upper.t_steps.or(self.t_steps),
            nmax: upper.nmax.or(self.nmax),
        }
    }

    pub fn params(&self) -> Result<ModelParams, CliError> {
        let nu_a = self.nu_a.unwrap_or(1.0);
        let nu_b = self.nu_b.unwrap_or(1.0);
        Ok(ModelParams::new(
            nu_a,
            nu_b,
            self.omega_a.unwrap_or(nu_a),
            self.omega_b.unwrap_or(nu_b),
            self.g_a.unwrap_or(1.0),
            self.g_b.unwrap_or(1.0),
        )
        .map_err(djc::SweepError::from)?)
    }

    pub fn spec(&self, grid: GridDefaults) -> Result<SweepSpec, CliError> {
        let alpha = match self.alpha {
            Some(a) => Axis::fixed(a),
            None => Axis::new(
                self.alpha_start.unwrap_or(0.0),
                self.alpha_stop.unwrap_or(FRAC_PI_2),
                self.alpha_steps.unwrap_or(grid.alpha_steps),
            ),
        };
        let spec = SweepSpec {
            family: self.family.unwrap_or(FamilyName::Phi).into(),
            params: self.params()?,
            t: Axis::new(
                self.t_start.unwrap_or(0.0),
                self.t_stop.unwrap_or(2.0 * PI),
                self.t_steps.unwrap_or(grid.t_steps),
            ),
            alpha,
            beta: self.beta.unwrap_or(0.0),
            nmax: self.nmax.unwrap_or(2),
        };
        spec.validate()?;
        Ok(spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn file(text: &str) -> Settings {
        Settings::from_toml(text, Path::new("test.toml")).unwrap()
    }

    #[test]
    fn flags_override_file() {
        let merged = file("g-a = 0.5\ng-b = 0.25\nt-steps = 5\n").overlay(Settings {
            g_a: Some(2.0),
            ..Default::default()
        });
        assert_eq!(merged.g_a, Some(2.0));
        assert_eq!(merged.g_b, Some(0.25));
        assert_eq!(merged.t_steps, Some(5));
    }

    #[test]
    fn fixed_alpha_replaces_range() {
        let lower = file("alpha-start = 0.1\nalpha-steps = 4\n");
        let merged = lower.clone().overlay(Settings {
            alpha: Some(0.3),
            ..Default::default()
        });
        assert_eq!(
            (merged.alpha, merged.alpha_start, merged.alpha_steps),
            (Some(0.3), None, None)
        );
        let back = merged.overlay(Settings {
            alpha_steps: Some(3),
            ..Default::default()
        });
        assert_eq!((back.alpha, back.alpha_steps), (None, Some(3)));
        assert_eq!(
            back.spec(SURFACE_GRID).unwrap().alpha,
            Axis::new(0.0, FRAC_PI_2, 3)
        );
    }

    #[test]
    fn file_errors() {
        let p = Path::new("c.toml");
        assert!(matches!(
            Settings::from_toml("gamma = 1\n", p),
            Err(CliError::Config { .. })
        ));
        assert!(matches!(
            Settings::from_toml("nmax = \"two\"\n", p),
            Err(CliError::Config { .. })
        ));
        assert!(matches!(
            Settings::from_toml("alpha = 0\nalpha-steps = 3\n", p),
            Err(CliError::Config { .. })
        ));
        assert_eq!(file("family = \"psi\"\n").family, Some(FamilyName::Psi));
    }

    #[test]
    fn defaults_are_resonant_full_grid() {
        let spec = Settings::default().spec(SURFACE_GRID).unwrap();
        assert!(spec.params.is_resonant());
        assert_eq!(spec.t, Axis::new(0.0, 2.0 * PI, 101));
        assert_eq!(spec.family, Family::Phi);
        let detuned = Settings {
            nu_a: Some(2.0),
            ..Default::default()
        }
        .params()
        .unwrap();
        assert_eq!(detuned.omega_a, 2.0);
    }

    #[test]
    fn invalid_specs() {
        let bad_steps = Settings {
            t_steps: Some(1),
            ..Default::default()
        };
        assert!(matches!(
            bad_steps.spec(SURFACE_GRID),
            Err(CliError::Sweep(_))
        ));
        let bad_alpha = Settings {
            alpha: Some(2.0),
            ..Default::default()
        };
        assert!(bad_alpha.spec(SURFACE_GRID).is_err());
        let bad_g = Settings {
            g_a: Some(0.0),
            ..Default::default()
        };
        assert!(bad_g.params().is_err());
    }
}
