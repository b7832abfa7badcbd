//! Command-line front end: `eval`, `verify`, `table` and `diff`.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::dynamics::{dirac_matrix, FrequencyConvention};
use crate::error::{Error, Result};
use crate::gamma::gamma5;
use crate::kinematics::{boost_half, FourMomentum, Side};
use crate::matrix::{c, CMatrix, CVector, C64};
use crate::spinors::{
    dirac_spinor, elko_helicity, lambda_spinor, rest_lambda, rest_rho, rho_spinor, Basis, Family, Index, Kind,
    PhaseConfig,
};
use crate::suite::{diff_reports, run_suite_with, RunContext, Status, SuiteName, VerificationReport};
use crate::symmetry::{
    charge_conjugation, chiral_helicity_operator, helicity_operator, parity_operator, u1, u2, u3, xi_matrix,
};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Parser)]
#[command(name = "majorana", version, about = "Self/anti-self charge-conjugate spinors and their verification")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a spinor or operator at a momentum.
    Eval(EvalArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Print the eight rest-frame lambda/rho spinors.
    Table(TableArgs),
    /// List checks whose status or measured constants differ between two reports.
    Diff(DiffArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Object {
    Lambda,
    Rho,
    U,
    V,
    HelicityOperator,
    ChiralHelicity,
    Xi,
    U1,
    U2,
    U3,
    Gamma5,
    ChargeConjugation,
    Parity,
    DiracMatrix,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    #[value(name = "S", alias = "s")]
    S,
    #[value(name = "A", alias = "a")]
    A,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum IndexArg {
    Up,
    Down,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BasisArg {
    Spinorial,
    Helicity,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    /// Three-momentum as "px,py,pz".
    #[arg(long, allow_hyphen_values = true)]
    pub momentum: String,
    #[arg(long, allow_hyphen_values = true)]
    pub mass: f64,
    #[arg(long, value_enum)]
    pub family: Object,
    #[arg(long, value_enum, default_value = "S")]
    pub kind: KindArg,
    #[arg(long, value_enum, default_value = "up")]
    pub index: IndexArg,
    #[arg(long, value_enum, default_value = "spinorial")]
    pub basis: BasisArg,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// all, spin-half, symmetry, dynamics or spin-one.
    #[arg(long)]
    pub suite: String,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[arg(long, default_value_t = 100)]
    pub samples: usize,
    /// Write the JSON report here.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    /// Evaluate the coupled equations under this plane-wave association ("plus" or "minus")
    /// instead of the discovered one.
    #[arg(long)]
    pub force_convention: Option<String>,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long, default_value_t = 2.0, allow_hyphen_values = true)]
    pub mass: f64,
}

#[derive(Debug, Args)]
pub struct DiffArgs {
    pub first: PathBuf,
    pub second: PathBuf,
}

/// Runs a parsed command, writing to `out`; returns the process exit code.
/// Errors map to [`EXIT_USAGE`] in `main`.
pub fn run(cli: Cli, out: &mut dyn Write) -> Result<u8> {
    match cli.command {
        Command::Eval(a) => cmd_eval(&a, out),
        Command::Verify(a) => cmd_verify(&a, out),
        Command::Table(a) => cmd_table(&a, out),
        Command::Diff(a) => cmd_diff(&a, out),
    }
}

fn io(e: std::io::Error) -> Error {
    Error::Usage(format!("i/o error: {e}"))
}

/// Twelve significant digits, shortest form, no negative zero.
pub fn fmt12(x: f64) -> String {
    let r: f64 = format!("{x:.11e}").parse().unwrap_or(x);
    if r == 0.0 {
        "0".into()
    } else if (1e-4..1e12).contains(&r.abs()) {
        format!("{r}")
    } else {
        format!("{r:e}")
    }
}

fn fmt_c(z: C64) -> String {
    format!("{}, {}", fmt12(z.re), fmt12(z.im))
}

/// `a+bi` form for scalars.
fn fmt_ci(z: C64) -> String {
    let im = fmt12(z.im);
    let sign = if im.starts_with('-') { "" } else { "+" };
    format!("{}{sign}{im}i", fmt12(z.re))
}

fn cjson(z: C64) -> Value {
    json!([z.re, z.im])
}

pub fn parse_momentum(s: &str, mass: f64) -> Result<FourMomentum> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(Error::Usage(format!("momentum must be \"px,py,pz\", got '{s}'")));
    }
    let mut v = [0.0; 3];
    for (slot, t) in v.iter_mut().zip(&parts) {
        *slot = t
            .parse()
            .map_err(|_| Error::Usage(format!("bad momentum component '{t}'")))?;
    }
    FourMomentum::new(v[0], v[1], v[2], mass)
}

enum Rendered {
    Spinor(CVector),
    Matrix { m: CMatrix, note: Option<String> },
}

fn spinor_for(a: &EvalArgs, p: &FourMomentum) -> Result<CVector> {
    let kind = match a.kind {
        KindArg::S => Kind::S,
        KindArg::A => Kind::A,
    };
    let index = match a.index {
        IndexArg::Up => Index::Up,
        IndexArg::Down => Index::Down,
    };
    let basis = match a.basis {
        BasisArg::Spinorial => Basis::Spinorial,
        BasisArg::Helicity => Basis::Helicity,
    };
    let b = match (a.family, basis) {
        (Object::Lambda, Basis::Spinorial) => lambda_spinor(p, kind, index)?,
        (Object::Rho, Basis::Spinorial) => rho_spinor(p, kind, index)?,
        (Object::Lambda, Basis::Helicity) => {
            elko_helicity(p, &p.angles()?, Family::Lambda, kind, index, &PhaseConfig::default())?
        }
        (Object::Rho, Basis::Helicity) => {
            elko_helicity(p, &p.angles()?, Family::Rho, kind, index, &PhaseConfig::default())?
        }
        (Object::U, _) => dirac_spinor(p, Family::U, index, basis)?,
        _ => dirac_spinor(p, Family::V, index, basis)?,
    };
    Ok(b.components)
}

fn xi_residual(p: &FourMomentum, xi: &CMatrix) -> f64 {
    [Side::Right, Side::Left]
        .into_iter()
        .map(|side| {
            let b = boost_half(p, side);
            (&(xi * &b) - &(&b.conj() * xi)).frobenius_norm() / (xi.frobenius_norm() * b.frobenius_norm())
        })
        .fold(0.0, f64::max)
}

fn cmd_eval(a: &EvalArgs, out: &mut dyn Write) -> Result<u8> {
    let p = parse_momentum(&a.momentum, a.mass)?;
    let mut residual = None;
    let rendered = match a.family {
        Object::Lambda | Object::Rho | Object::U | Object::V => Rendered::Spinor(spinor_for(a, &p)?),
        Object::HelicityOperator => Rendered::Matrix { m: helicity_operator(&p)?.matrix, note: None },
        Object::ChiralHelicity => Rendered::Matrix { m: chiral_helicity_operator(&p)?.matrix, note: None },
        Object::Xi => {
            let m = xi_matrix(&p)?;
            residual = Some(xi_residual(&p, &m));
            Rendered::Matrix { m, note: None }
        }
        Object::U1 => Rendered::Matrix { m: u1(&p)?, note: None },
        Object::U2 => Rendered::Matrix { m: u2(), note: None },
        Object::U3 => Rendered::Matrix { m: u3(), note: None },
        Object::Gamma5 => Rendered::Matrix { m: gamma5(), note: None },
        Object::ChargeConjugation => {
            let op = charge_conjugation(&PhaseConfig::default());
            Rendered::Matrix {
                m: op.effective_matrix(),
                note: Some("antilinear: acts as M K (complex conjugation first)".into()),
            }
        }
        Object::Parity => Rendered::Matrix {
            m: parity_operator().matrix,
            note: Some("reflects momentum: p -> -p".into()),
        },
        Object::DiracMatrix => Rendered::Matrix { m: dirac_matrix(&p), note: None },
    };
    let name = a
        .family
        .to_possible_value()
        .map(|v| v.get_name().to_string())
        .unwrap_or_default();
    match a.format {
        Format::Json => {
            let mut v = json!({
                "object": name,
                "momentum": [p.px(), p.py(), p.pz()],
                "mass": p.mass(),
                "energy": p.energy(),
                "p_r": cjson(p.p_r()),
                "p_l": cjson(p.p_l()),
                "p_plus": p.p_plus(),
                "p_minus": p.p_minus(),
            });
            match &rendered {
                Rendered::Spinor(s) => {
                    v["components"] = json!(s.iter().map(|z| cjson(*z)).collect::<Vec<_>>());
                }
                Rendered::Matrix { m, note } => {
                    let rows: Vec<Value> = (0..m.rows())
                        .map(|r| json!((0..m.cols()).map(|c| cjson(m.entries()[r * m.cols() + c])).collect::<Vec<_>>()))
                        .collect();
                    v["matrix"] = json!(rows);
                    if let Some(n) = note {
                        v["note"] = json!(n);
                    }
                }
            }
            if let Some(r) = residual {
                v["intertwiner_residual"] = json!(r);
            }
            writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("json value renders")).map_err(io)?;
        }
        Format::Text => {
            let mut s = String::new();
            s.push_str(&format!(
                "{name} at p = ({}, {}, {}), m = {}, E = {}\n",
                fmt12(p.px()),
                fmt12(p.py()),
                fmt12(p.pz()),
                fmt12(p.mass()),
                fmt12(p.energy())
            ));
            s.push_str(&format!(
                "p_r = {}  p_l = {}  p+ = {}  p- = {}\n",
                fmt_ci(p.p_r()),
                fmt_ci(p.p_l()),
                fmt12(p.p_plus()),
                fmt12(p.p_minus())
            ));
            match &rendered {
                Rendered::Spinor(v) => {
                    s.push_str(&format!("{:>3} {:>22} {:>22}\n", "#", "re", "im"));
                    for (i, z) in v.iter().enumerate() {
                        s.push_str(&format!("{i:>3} {:>22} {:>22}\n", fmt12(z.re), fmt12(z.im)));
                    }
                }
                Rendered::Matrix { m, note } => {
                    for r in 0..m.rows() {
                        let row: Vec<String> = (0..m.cols())
                            .map(|c| format!("({})", fmt_c(m.entries()[r * m.cols() + c])))
                            .collect();
                        s.push_str(&row.join("  "));
                        s.push('\n');
                    }
                    if let Some(n) = note {
                        s.push_str(n);
                        s.push('\n');
                    }
                }
            }
            if let Some(r) = residual {
                s.push_str(&format!("intertwiner residual: {r:.3e}\n"));
            }
            out.write_all(s.as_bytes()).map_err(io)?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write) -> Result<u8> {
    let suite: SuiteName = a.suite.parse()?;
    let forced = a
        .force_convention
        .as_deref()
        .map(str::parse::<FrequencyConvention>)
        .transpose()?;
    let ctx = RunContext {
        forced_convention: forced,
        ..RunContext::new(a.seed, a.samples)
    };
    let report = run_suite_with(suite, &ctx)?;
    let json = report.to_json()?;
    if let Some(path) = &a.out {
        fs::write(path, format!("{json}\n")).map_err(io)?;
    }
    let summary = format!(
        "{}: {} checks, {} passed, {} failed (seed {}, samples {})",
        report.suite, report.summary.total, report.summary.passed, report.summary.failed, report.seed, report.samples
    );
    match a.format {
        Format::Json => {
            writeln!(out, "{json}").map_err(io)?;
            eprintln!("{summary}");
        }
        Format::Text => {
            for ch in &report.checks {
                let tag = match ch.status {
                    Status::Pass => "PASS",
                    Status::Fail => "FAIL",
                };
                writeln!(out, "{tag} {:<42} residual {:.3e}  tolerance {:.0e}", ch.id, ch.residual, ch.tolerance)
                    .map_err(io)?;
            }
            writeln!(out, "{summary}").map_err(io)?;
        }
    }
    Ok(if report.all_passed() { EXIT_OK } else { EXIT_FAILED })
}

/// `0`, `1`, `-1`, `i` or `-i` when `z` is one of them, otherwise the number.
fn symbol(z: C64) -> String {
    let tol = 1e-12;
    for (v, s) in [(c(0.0, 0.0), "0"), (c(1.0, 0.0), "1"), (c(-1.0, 0.0), "-1"), (c(0.0, 1.0), "i"), (c(0.0, -1.0), "-i")] {
        if (z - v).norm() <= tol {
            return s.into();
        }
    }
    fmt_ci(z)
}

fn cmd_table(a: &TableArgs, out: &mut dyn Write) -> Result<u8> {
    if !(a.mass > 0.0 && a.mass.is_finite()) {
        return Err(Error::Domain(format!("mass must be positive, got {}", a.mass)));
    }
    let pre = (a.mass / 2.0).sqrt();
    let mut s = format!("sqrt(m/2) = {}\n", fmt12(pre));
    for (family, label) in [(Family::Lambda, "lambda"), (Family::Rho, "rho")] {
        for kind in [Kind::S, Kind::A] {
            for index in Index::BOTH {
                let b = match family {
                    Family::Lambda => rest_lambda(kind, index, a.mass)?,
                    _ => rest_rho(kind, index, a.mass)?,
                };
                let entries: Vec<String> = b.components.iter().map(|z| symbol(z / pre)).collect();
                s.push_str(&format!("{:<16}({})\n", format!("{label} {kind} {index}"), entries.join(", ")));
            }
        }
    }
    out.write_all(s.as_bytes()).map_err(io)?;
    Ok(EXIT_OK)
}

fn read_report(path: &PathBuf) -> Result<VerificationReport> {
    let text = fs::read_to_string(path).map_err(|e| Error::Usage(format!("cannot read {}: {e}", path.display())))?;
    VerificationReport::from_json(&text)
}

fn cmd_diff(a: &DiffArgs, out: &mut dyn Write) -> Result<u8> {
    let drift = diff_reports(&read_report(&a.first)?, &read_report(&a.second)?)?;
    if drift.is_empty() {
        writeln!(out, "no differences").map_err(io)?;
        return Ok(EXIT_OK);
    }
    for id in &drift {
        writeln!(out, "{id}").map_err(io)?;
    }
    Ok(EXIT_FAILED)
}
