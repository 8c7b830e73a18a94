use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use djc::erratum::{erratum_report, DEVIATION_TOL};
use djc::sweep::{DISCREPANCY_TOL, FIDELITY_TOL, LEAKAGE_TOL};
use djc::{evaluate, make_state, verify, Execution, Family, InvariantSet, SweepSpec, VerifyReport};

use crate::amplitudes::parse_amplitudes;
use crate::cli::{Cli, Command, SweepArgs};
use crate::config::{GridDefaults, Settings, SURFACE_GRID, VERIFY_GRID};
use crate::csv::{self, fmt};
use crate::error::CliError;
use crate::svg;

/// Result of a command that ran to completion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Success,
    VerificationFailed,
}

impl Outcome {
    pub fn exit_code(self) -> i32 {
        match self {
            Outcome::Success => 0,
            Outcome::VerificationFailed => 1,
        }
    }
}

pub fn run(cli: Cli) -> Result<Outcome, CliError> {
    match cli.command {
        Command::Invariants {
            input,
            no_normalize,
            out,
        } => {
            let report = cmd_invariants(&input, !no_normalize)?;
            emit_text(out.as_deref(), &report)?;
            Ok(Outcome::Success)
        }
        Command::Evolve { sweep, out } => {
            let (spec, exec) = resolve(&sweep, SURFACE_GRID)?;
            let rows = evaluate(&spec, exec)?;
            match out {
                Some(path) => write_file(&path, |w| csv::write_rows(w, &rows)),
                None => {
                    csv::write_rows(io::stdout().lock(), &rows).map_err(CliError::io("<stdout>"))
                }
            }?;
            Ok(Outcome::Success)
        }
        Command::Surface { sweep, out, svg } => {
            let (spec, exec) = resolve(&sweep, SURFACE_GRID)?;
            let summary = cmd_surface(&spec, exec, &svg, out.as_deref())?;
            emit_text(None, &summary)?;
            Ok(Outcome::Success)
        }
        Command::Verify { sweep, out } => {
            let settings = merged(&sweep)?;
            let spec = settings.spec(VERIFY_GRID)?;
            let families: Vec<Family> = match settings.family {
                Some(f) => vec![f.into()],
                None => vec![Family::Phi, Family::Psi],
            };
            let report = verify(&spec, &families, execution(&sweep))?;
            if let Some(path) = &out {
                write_file(path, |w| write_verify_csv(w, &report))?;
            }
            let text = verify_text(&spec, &families, &report, out.is_none());
            emit_text(None, &text)?;
            Ok(if report.passed() {
                Outcome::Success
            } else {
                Outcome::VerificationFailed
            })
        }
    }
}

fn merged(sweep: &SweepArgs) -> Result<Settings, CliError> {
    let base = match &sweep.config {
        Some(path) => Settings::load(path)?,
        None => Settings::default(),
    };
    Ok(base.overlay(sweep.settings.clone()))
}

fn execution(sweep: &SweepArgs) -> Execution {
    if sweep.sequential {
        Execution::Sequential
    } else {
        Execution::Parallel
    }
}

fn resolve(sweep: &SweepArgs, grid: GridDefaults) -> Result<(SweepSpec, Execution), CliError> {
    Ok((merged(sweep)?.spec(grid)?, execution(sweep)))
}

fn write_file(
    path: &Path,
    body: impl FnOnce(&mut BufWriter<File>) -> io::Result<()>,
) -> Result<(), CliError> {
    let file = File::create(path).map_err(CliError::io(path))?;
    let mut w = BufWriter::new(file);
    body(&mut w)
        .and_then(|_| w.flush())
        .map_err(CliError::io(path))
}

fn emit_text(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => write_file(p, |w| w.write_all(text.as_bytes())),
        None => io::stdout()
            .lock()
            .write_all(text.as_bytes())
            .map_err(CliError::io("<stdout>")),
    }
}

/// Short human-readable number: plain decimals in the usual range,
/// scientific notation outside it, shortest round-trip digits either way.
fn human(x: f64) -> String {
    let a = x.abs();
    if x == 0.0 {
        "0".into()
    } else if (1e-4..1e6).contains(&a) {
        format!("{x}")
    } else {
        format!("{x:e}")
    }
}

pub fn cmd_invariants(path: &Path, normalize: bool) -> Result<String, CliError> {
    let text = std::fs::read_to_string(path).map_err(CliError::io(path))?;
    let amps = parse_amplitudes(&text).map_err(|e| CliError::Parse {
        path: path.display().to_string(),
        line: e.line,
        column: e.column,
        message: e.message,
    })?;
    let state = make_state(amps, normalize)?;
    Ok(invariants_text(&InvariantSet::of(&state), state.norm()))
}

pub fn invariants_text(inv: &InvariantSet, norm: f64) -> String {
    let mut s = String::new();
    for (name, z) in [
        ("I1", inv.i1),
        ("I2", inv.i2),
        ("I3", inv.i3),
        ("I4", inv.i4),
        ("S", inv.s),
        ("T", inv.t),
        ("D4", inv.d4),
    ] {
        s.push_str(&format!(
            "re_{name} = {}\nim_{name} = {}\n",
            human(z.re),
            human(z.im)
        ));
    }
    s.push_str(&format!(
        "tau4 = {}\nnorm = {}\n",
        human(inv.tau4),
        human(norm)
    ));
    s
}

pub fn cmd_surface(
    spec: &SweepSpec,
    exec: Execution,
    svg_path: &Path,
    csv_path: Option<&Path>,
) -> Result<String, CliError> {
    if spec.t.steps < 2 || spec.alpha.steps < 2 {
        return Err(CliError::Usage(
            "surface needs both t and alpha swept with at least 2 steps".into(),
        ));
    }
    let rows = evaluate(spec, exec)?;
    let csv_path: PathBuf = csv_path
        .map(Path::to_path_buf)
        .unwrap_or_else(|| svg_path.with_extension("csv"));
    write_file(&csv_path, |w| csv::write_rows(w, &rows))?;
    let family = match spec.family {
        Family::Phi => "Φ",
        Family::Psi => "Ψ",
    };
    let p = &spec.params;
    let title = format!(
        "τ₄ of {family}′(t), β = {}, g_A = {}, g_B = {}, Δ_A = {}, Δ_B = {}",
        human(spec.beta),
        human(p.g_a),
        human(p.g_b),
        human(p.omega_a - p.nu_a),
        human(p.omega_b - p.nu_b)
    );
    let doc = svg::render(&rows, spec.t.steps, spec.alpha.steps, &title);
    write_file(svg_path, |w| w.write_all(doc.as_bytes()))?;
    let max = rows
        .iter()
        .map(|r| r.invariants.tau4)
        .fold(f64::NEG_INFINITY, f64::max);
    let min = rows
        .iter()
        .map(|r| r.invariants.tau4)
        .fold(f64::INFINITY, f64::min);
    Ok(format!(
        "wrote {} ({} cells) and {}\ntau4 min = {}, max = {}\n",
        svg_path.display(),
        rows.len(),
        csv_path.display(),
        human(min),
        human(max)
    ))
}

fn family_name(f: Family) -> &'static str {
    match f {
        Family::Phi => "phi",
        Family::Psi => "psi",
    }
}

pub const VERIFY_HEADER: &str =
    "family,t,alpha,beta,fidelity,max_invariant_discrepancy,leakage,pass";

fn write_verify_csv<W: Write>(mut w: W, report: &VerifyReport) -> io::Result<()> {
    writeln!(w, "{VERIFY_HEADER}")?;
    for r in &report.rows {
        writeln!(
            w,
            "{},{},{},{},{},{},{},{}",
            family_name(r.family),
            fmt(r.t),
            fmt(r.alpha),
            fmt(r.beta),
            fmt(r.fidelity),
            fmt(r.max_invariant_discrepancy),
            fmt(r.leakage),
            r.passes()
        )?;
    }
    Ok(())
}

fn verify_text(
    spec: &SweepSpec,
    families: &[Family],
    report: &VerifyReport,
    with_rows: bool,
) -> String {
    let p = &spec.params;
    let names: Vec<&str> = families.iter().map(|&f| family_name(f)).collect();
    let mut s = format!(
        "verify: families {}; grid {} t x {} alpha; beta = {}; nmax = {}\nparams: nu_a = {}, nu_b = {}, omega_a = {}, omega_b = {}, g_a = {}, g_b = {}\n",
        names.join(", "),
        spec.t.steps,
        spec.alpha.steps,
        human(spec.beta),
        spec.nmax,
        human(p.nu_a),
        human(p.nu_b),
        human(p.omega_a),
        human(p.omega_b),
        human(p.g_a),
        human(p.g_b)
    );
    if with_rows {
        s.push_str(&format!(
            "\n{:<6} {:>10} {:>10} {:>14} {:>14} {:>14}  status\n",
            "family", "t", "alpha", "1-fidelity", "discrepancy", "leakage"
        ));
        for r in &report.rows {
            s.push_str(&format!(
                "{:<6} {:>10.6} {:>10.6} {:>14.3e} {:>14.3e} {:>14.3e}  {}\n",
                family_name(r.family),
                r.t,
                r.alpha,
                1.0 - r.fidelity,
                r.max_invariant_discrepancy,
                r.leakage,
                if r.passes() { "ok" } else { "FAIL" }
            ));
        }
    }
    s.push_str(&format!(
        "\npoints: {}, failures: {}\nmin fidelity: 1 - {:.3e} (needs >= 1 - {FIDELITY_TOL:e})\nmax invariant discrepancy: {:.3e} (needs < {DISCREPANCY_TOL:e})\nmax leakage: {:.3e} (needs < {LEAKAGE_TOL:e})\n",
        report.rows.len(),
        report.failures(),
        1.0 - report.min_fidelity(),
        report.max_discrepancy(),
        report.max_leakage()
    ));

    let findings = erratum_report(Some(("this run", p)));
    s.push_str(&format!(
        "\nprinted-formula erratum table (printed vs amplitude-level evaluation, deviation tolerance {DEVIATION_TOL:e})\n{:<34} {:<24} {:<32} {:>12} {:>12}  verdict\n",
        "formula", "regime", "parameter point", "max|diff|", "max|truth|"
    ));
    for f in &findings {
        s.push_str(&format!(
            "{:<34} {:<24} {:<32} {:>12.3e} {:>12.3e}  {}\n",
            f.entry.name,
            f.entry.regime.label(),
            f.point,
            f.max_deviation,
            f.max_reference,
            if f.deviates() { "DEVIATES" } else { "agrees" }
        ));
    }
    let deviating = findings.iter().filter(|f| f.deviates()).count();
    s.push_str(&format!(
        "{deviating} of {} printed-formula comparisons deviate\n",
        findings.len()
    ));
    s.push_str(if report.passed() {
        "\nresult: PASS\n"
    } else {
        "\nresult: FAIL\n"
    });
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn human_numbers() {
        assert_eq!(human(1.0), "1");
        assert_eq!(human(0.25), "0.25");
        assert_eq!(human(-0.0), "0");
        assert_eq!(human(3e-17), "3e-17");
    }

    #[test]
    fn exit_codes() {
        assert_eq!(Outcome::Success.exit_code(), 0);
        assert_eq!(Outcome::VerificationFailed.exit_code(), 1);
    }
}
