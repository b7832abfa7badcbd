//! Named, seeded, tolerance-tagged checks and the report they produce.
//!
//! Every check draws its own random stream from `(seed, id)`, so a check's
//! outcome does not depend on which other checks run. Measured constants are
//! evaluated at fixed reference points so they do not depend on the seed.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::dynamics::{
    self, dirac_matrix, discover_convention, eight_component_parts, eight_component_residual,
    lagrangian_mass_term, lambda5, markov_residual, markov_superposition, sen_gupta_chirality_study,
    sen_gupta_dirac_mass, sen_gupta_equivalence, sen_gupta_null_space, sen_gupta_residual,
    FrequencyConvention, MassTermFields,
};
use crate::error::{Error, Result};
use crate::gamma::{gamma0, gamma5};
use crate::kinematics::{boost_half, parity_reflect, AngularParams, FourMomentum, FourVector, Side};
use crate::matrix::{c, phase, CMatrix, CVector, C64, I, ONE};
use crate::sampling::Sampler;
use crate::spin_one::{
    self, gamma5_one, gamma5_sc_one, generators, sc_one, spin1_conjugacy_scan, spin1_lambda, spin1_rho,
    wigner_theta_one, ConjugationChoice, Helicity1, ScanReport,
};
use crate::spinors::{
    bar_product, boosted_rest, dirac_spinor, elko_helicity, helicity_connection,
    helicity_two_spinor, lambda_spinor, rest_lambda, rest_rho, rho_spinor, wigner_theta_half, Basis,
    Bispinor, Family, Helicity, Index, Kind, PhaseConfig,
};
use crate::symmetry::{
    alpha_along, chiral_gauge_transform, chiral_helicity_label, chiral_helicity_operator,
    charge_conjugation, chirality, classify_cp_action, eigen_residual, family_fields,
    helicity_operator, lambda_basis_transforms, parity_operator, relation_residuals, span_fit,
    su2_from_angle, u1, u2, u3, xi_matrix, xi_transform_target, CpFamily, MomentumPoint, Relation,
    SymmetryOperator, XiTransform,
};
use crate::tolerance::{ALGEBRAIC, IDENTITY, NONEXISTENCE_FLOOR, ZETA_SCAN};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SuiteName {
    All,
    SpinHalf,
    Symmetry,
    Dynamics,
    SpinOne,
}

impl SuiteName {
    fn includes(self, other: SuiteName) -> bool {
        self == SuiteName::All || self == other
    }
}

impl fmt::Display for SuiteName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SuiteName::All => "all",
            SuiteName::SpinHalf => "spin-half",
            SuiteName::Symmetry => "symmetry",
            SuiteName::Dynamics => "dynamics",
            SuiteName::SpinOne => "spin-one",
        })
    }
}

impl FromStr for SuiteName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(SuiteName::All),
            "spin-half" => Ok(SuiteName::SpinHalf),
            "symmetry" => Ok(SuiteName::Symmetry),
            "dynamics" => Ok(SuiteName::Dynamics),
            "spin-one" => Ok(SuiteName::SpinOne),
            _ => Err(Error::Usage(format!(
                "unknown suite '{s}' (expected all, spin-half, symmetry, dynamics or spin-one)"
            ))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Expectation {
    /// Residual must not exceed the tolerance.
    Vanish,
    /// Residual must exceed the tolerance (a floor witnessing that something does not hold).
    ExceedFloor,
    /// A discrete outcome must match, and its residual must not exceed the tolerance.
    Classify,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Run-wide settings shared by every check.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RunContext {
    pub seed: u64,
    pub samples: usize,
    /// Evaluate the coupled equations under this convention instead of the discovered one.
    pub forced_convention: Option<FrequencyConvention>,
}

impl RunContext {
    pub fn new(seed: u64, samples: usize) -> Self {
        Self {
            seed,
            samples,
            forced_convention: None,
        }
    }
}

/// What a check measured.
#[derive(Clone, Debug, Default)]
pub struct Outcome {
    pub residual: f64,
    /// Used by [`Expectation::Classify`] only.
    pub matched: bool,
    pub samples: usize,
    pub constants: BTreeMap<String, Value>,
}

impl Outcome {
    fn new(residual: f64, samples: usize) -> Self {
        Self {
            residual,
            matched: true,
            samples,
            constants: BTreeMap::new(),
        }
    }

    fn with(mut self, key: &str, value: Value) -> Self {
        self.constants.insert(key.to_string(), value);
        self
    }

    fn matched(mut self, m: bool) -> Self {
        self.matched = m;
        self
    }
}

type CheckFn = fn(&RunContext, &mut Sampler) -> Result<Outcome>;

pub struct CheckSpec {
    pub id: &'static str,
    /// The claim the check tests, in words.
    pub anchor: &'static str,
    pub suite: SuiteName,
    pub expectation: Expectation,
    pub tolerance: f64,
    run: CheckFn,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub id: String,
    pub anchor: String,
    pub expectation: Expectation,
    pub status: Status,
    pub residual: f64,
    pub tolerance: f64,
    pub samples: usize,
    /// Momenta redrawn for lying too close to the -z axis.
    pub resampled: usize,
    pub constants: BTreeMap<String, Value>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: SuiteName,
    pub seed: u64,
    pub samples: usize,
    pub convention: Option<FrequencyConvention>,
    pub checks: Vec<CheckResult>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn check(&self, id: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string_pretty(self).map_err(|e| Error::Usage(format!("cannot render report: {e}")))
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Usage(format!("cannot parse report: {e}")))
    }
}

pub fn run_suite(name: SuiteName, seed: u64, samples: usize) -> Result<VerificationReport> {
    run_suite_with(name, &RunContext::new(seed, samples))
}

pub fn run_suite_with(name: SuiteName, ctx: &RunContext) -> Result<VerificationReport> {
    if ctx.samples == 0 {
        return Err(Error::Usage("samples must be at least 1".into()));
    }
    let specs = registry();
    validate_registry(&specs)?;
    let selected: Vec<&CheckSpec> = specs.iter().filter(|s| name.includes(s.suite)).collect();
    let checks: Vec<CheckResult> = selected.par_iter().map(|spec| execute(spec, ctx)).collect();
    let passed = checks.iter().filter(|c| c.status == Status::Pass).count();
    let convention = match ctx.forced_convention {
        Some(c) => Some(c),
        None => discovered_convention(ctx)?,
    };
    Ok(VerificationReport {
        suite: name,
        seed: ctx.seed,
        samples: ctx.samples,
        convention,
        summary: Summary {
            total: checks.len(),
            passed,
            failed: checks.len() - passed,
        },
        checks,
    })
}

fn execute(spec: &CheckSpec, ctx: &RunContext) -> CheckResult {
    let mut sampler = Sampler::for_stream(ctx.seed, spec.id);
    let outcome = (spec.run)(ctx, &mut sampler).unwrap_or_else(|e| {
        Outcome::new(f64::INFINITY, 0)
            .matched(false)
            .with("error", json!(e.to_string()))
    });
    let residual = if outcome.residual.is_finite() {
        outcome.residual
    } else {
        f64::MAX
    };
    let pass = outcome.residual.is_finite()
        && match spec.expectation {
            Expectation::Vanish => residual <= spec.tolerance,
            Expectation::ExceedFloor => residual > spec.tolerance,
            Expectation::Classify => outcome.matched && residual <= spec.tolerance,
        };
    CheckResult {
        id: spec.id.to_string(),
        anchor: spec.anchor.to_string(),
        expectation: spec.expectation,
        status: if pass { Status::Pass } else { Status::Fail },
        residual,
        tolerance: spec.tolerance,
        samples: outcome.samples,
        resampled: sampler.resampled(),
        constants: outcome.constants,
    }
}

/// Ids and anchors must be nonempty and unique.
pub fn validate_registry(specs: &[CheckSpec]) -> Result<()> {
    let mut ids = HashSet::new();
    let mut anchors = HashSet::new();
    for s in specs {
        if s.id.is_empty() || s.anchor.trim().is_empty() {
            return Err(Error::Domain(format!("check '{}' has an empty id or anchor", s.id)));
        }
        if !ids.insert(s.id) {
            return Err(Error::Domain(format!("duplicate check id '{}'", s.id)));
        }
        if !anchors.insert(s.anchor) {
            return Err(Error::Domain(format!("duplicate anchor on check '{}'", s.id)));
        }
        if !(s.tolerance > 0.0) {
            return Err(Error::Domain(format!("check '{}' has a nonpositive tolerance", s.id)));
        }
    }
    Ok(())
}

/// Ids whose status or measured constants differ between two reports of the same suite.
pub fn diff_reports(a: &VerificationReport, b: &VerificationReport) -> Result<Vec<String>> {
    if a.suite != b.suite {
        return Err(Error::Usage(format!(
            "cannot compare a '{}' report with a '{}' report",
            a.suite, b.suite
        )));
    }
    let index = |r: &VerificationReport| -> BTreeMap<String, CheckResult> {
        r.checks.iter().map(|c| (c.id.clone(), c.clone())).collect()
    };
    let (ia, ib) = (index(a), index(b));
    let ids: BTreeSet<&String> = ia.keys().chain(ib.keys()).collect();
    let mut out = Vec::new();
    for id in ids {
        let same = match (ia.get(id), ib.get(id)) {
            (Some(x), Some(y)) => {
                x.status == y.status
                    && x.constants.len() == y.constants.len()
                    && x.constants.iter().all(|(k, v)| y.constants.get(k).is_some_and(|w| values_close(v, w)))
            }
            _ => false,
        };
        if !same {
            out.push(id.clone());
        }
    }
    Ok(out)
}

fn values_close(a: &Value, b: &Value) -> bool {
    match (a, b) {
        (Value::Number(x), Value::Number(y)) => match (x.as_f64(), y.as_f64()) {
            (Some(x), Some(y)) => (x - y).abs() <= 1e-9 * x.abs().max(y.abs()).max(1.0),
            _ => x == y,
        },
        (Value::Array(x), Value::Array(y)) => {
            x.len() == y.len() && x.iter().zip(y).all(|(p, q)| values_close(p, q))
        }
        (Value::Object(x), Value::Object(y)) => {
            x.len() == y.len() && x.iter().all(|(k, v)| y.get(k).is_some_and(|w| values_close(v, w)))
        }
        _ => a == b,
    }
}

fn discovered_convention(ctx: &RunContext) -> Result<Option<FrequencyConvention>> {
    let mut s = Sampler::for_stream(ctx.seed, CONVENTION_ID);
    Ok(discover_convention(&s.momenta(ctx.samples))?.convention)
}

const CONVENTION_ID: &str = "dynamics.convention";

// ---------------------------------------------------------------------------
// helpers

fn cjson(z: C64) -> Value {
    json!([z.re, z.im])
}

/// Rounded to six decimals, for constants that come out of an iterative search.
fn round6(x: f64) -> f64 {
    let r = (x * 1e6).round() / 1e6;
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

fn cjson6(z: C64) -> Value {
    json!([round6(z.re), round6(z.im)])
}

fn rel(a: &CVector, b: &CVector) -> f64 {
    (a - b).norm() / b.norm()
}

fn reference() -> FourMomentum {
    FourMomentum::new(0.6, -0.8, 1.2, 1.5).expect("reference momentum is valid")
}

fn theta_c_values(s: &mut Sampler) -> [f64; 4] {
    [0.0, PI / 2.0, PI, s.uniform(0.0, 2.0 * PI)]
}

const KINDS: [Kind; 2] = [Kind::S, Kind::A];
const ELKO: [Family; 2] = [Family::Lambda, Family::Rho];

fn closed_form(p: &FourMomentum, family: Family, kind: Kind, index: Index) -> Result<Bispinor> {
    match family {
        Family::Lambda => lambda_spinor(p, kind, index),
        _ => rho_spinor(p, kind, index),
    }
}

fn random_vector(s: &mut Sampler, dim: usize) -> CVector {
    let v: Vec<C64> = (0..dim).map(|_| c(s.uniform(-1.0, 1.0), s.uniform(-1.0, 1.0))).collect();
    CVector::new(v).expect("supported dimension")
}

fn random_weights(s: &mut Sampler) -> [[f64; 2]; 4] {
    let mut w = [[0.0; 2]; 4];
    for row in &mut w {
        for x in row.iter_mut() {
            *x = s.uniform(-1.0, 1.0);
        }
    }
    w
}

/// Natural scale of the mass term: `m` times the summed squared field norms.
fn mass_scale(f: &MassTermFields, m: f64) -> f64 {
    m * [&f.lambda_s, &f.rho_a, &f.lambda_a, &f.rho_s]
        .iter()
        .map(|v| v.norm().powi(2))
        .sum::<f64>()
}

fn c_sign_of(kind: Kind) -> f64 {
    kind.c_sign()
}

fn effective_convention(ctx: &RunContext, s: &mut Sampler) -> Result<FrequencyConvention> {
    if let Some(c) = ctx.forced_convention {
        return Ok(c);
    }
    let mut own = Sampler::for_stream(ctx.seed, CONVENTION_ID);
    let _ = s;
    discover_convention(&own.momenta(ctx.samples))?
        .convention
        .ok_or_else(|| Error::Domain("no frequency convention satisfies the coupled equations".into()))
}

// ---------------------------------------------------------------------------
// spin-half checks

fn conjugacy_closed(ctx: &RunContext, s: &mut Sampler, family: Family) -> Result<Outcome> {
    let cop = charge_conjugation(&PhaseConfig::default());
    let mut worst = 0.0_f64;
    for p in s.momenta(ctx.samples) {
        for kind in KINDS {
            for index in Index::BOTH {
                let v = closed_form(&p, family, kind, index)?.components;
                worst = worst.max(rel(&cop.apply(&v), &v.scale_re(c_sign_of(kind))));
            }
        }
    }
    Ok(Outcome::new(worst, ctx.samples))
}

fn check_conjugacy_lambda(ctx: &RunContext, s: &mut Sampler) -> Result<Outcome> {
    conjugacy_closed(ctx, s, Family::Lambda)
}

fn check_conjugacy_rho(ctx: &RunContext, s: &mut Sampler) -> Result<Outcome> {
    conjugacy_closed(ctx, s, Family::Rho)
}

fn check_conjugacy_helicity_basis(ctx: &RunContext, s: &mut Sampler) -> Result<Outcome> {
    let mut worst = 0.0_f64;
    let thetas = theta_c_values(s);
    for theta_c in thetas {
        let cfg = PhaseConfig {
            theta_c,
            ..Default::default()
        };
        let cop = charge_conjugation(&cfg);
        for p in s.momenta(ctx.samples) {
            let a = p.angles()?;
            for family in ELKO {
                for kind in KINDS {
                    for index in Index::BOTH {
                        let v = elko_helicity(&p, &a, family, kind, index, &cfg)?.components;
                        worst = worst.max(rel(&cop.apply(&v), &v.scale_re(c_sign_of(kind))));
                    }
                }
            }
        }
    }
    Ok(Outcome::new(worst, ctx.samples * thetas.len()).with("theta_c_values", json!(thetas.len())))
}

fn check_dirac_image(ctx: &RunContext, s: &mut Sampler) -> Result<Outcome> {
    let cop = charge_conjugation(&PhaseConfig::default());
    let fit = |p: &FourMomentum, from: Family, to: Family, index: Index| -> Result<(Vec<C64>, f64)> {
        let x = dirac_spinor(p, from, index, Basis::Spinorial)?.components;
        let span: Vec<CVector> = Index::BOTH
            .iter()
            .map(|&i| dirac_spinor(p, to, i, Basis::Spinorial).map(|b| b.components))
            .collect::<Result<_>>()?;
        span_fit(&span, &cop.apply(&x))
    };
    let mut worst = 0.0_f64;
    for p in s.momenta(ctx.samples) {
        for index in Index::BOTH {
            worst = worst.max(fit(&p, Family::U, Family::V, index)?.1);
            worst = worst.max(fit(&p, Family::V, Family::U, index)?.1);
        }
    }
    let r = reference();
    let up = fit(&r, Family::U, Family::V, Index::Up)?.0;
    let down = fit(&r, Family::U, Family::V, Index::Down)?.0;
    Ok(Outcome::new(worst, ctx.samples)
        .with("c_u_up_in_v", json!(up.iter().map(|z| cjson6(*z)).collect::<Vec<_>>()))
        .with("c_u_down_in_v", json!(down.iter().map(|z| cjson6(*z)).collect::<Vec<_>>())))
}

fn check_rest_frame(ctx: &RunContext, s: &mut Sampler) -> Result<Outcome> {
    let mut worst = 0.0_f64;
    for _ in 0..ctx.samples {
        let m = s.mass();
        let p = FourMomentum::at_rest(m)?;
        for kind in KINDS {
            for index in Index::BOTH {
                let l = rest_lambda(kind, index, m)?.components;
                let r = rest_rho(kind, index, m)?.components;
                worst = worst.max(rel(&lambda_spinor(&p, kind, index)?.components, &l));
                worst = worst.max(rel(&rho_spinor(&p, kind, index)?.components, &r));
            }
        }
    }
    Ok(Outcome::new(worst, ctx.samples))
}

fn check_rest_limit(ctx: &RunContext, s: &mut Sampler) -> Result<Outcome> {
    let mut worst = 0.0_f64;
    for _ in 0..ctx.samples {
        let m = s.mass();
        let k = s.uniform(0.0, 1e-8) * m;
        let [x, y, z] = s.unit_vector();
        let p = FourMomentum::new(k * x, k * y, k * z, m)?;
        for kind in KINDS {
            for index in Index::BOTH {
                let l = rest_lambda(kind, index, m)?.components;
                let r = rest_rho(kind, index, m)?.components;
                worst = worst.max(rel(&lambda_spinor(&p, kind, index)?.components, &l));
                worst = worst.max(rel(&rho_spinor(&p, kind, index)?.components, &r));
            }
        }
    }
    Ok(Outcome::new(worst, ctx.samples))
}

fn check_boost_consistency(ctx: &RunContext, s: &mut Sampler) -> Result<Outcome> {
    let measure = |p: &FourMomentum, family, kind, index| -> Result<(C64, f64)> {
        let closed = closed_form(p, family, kind, index)?.components;
        let boosted = boosted_rest(p, family, kind, index)?.components;
        let (k, r) = closed.projection_residual(&boosted);
        Ok((k, r / closed.norm() + (k.norm() - 1.0).abs()))
    };
    let mut worst = 0.0_f64;
    for p in s.momenta(ctx.samples) {
        for family in ELKO {
            for kind in KINDS {
                for index in Index::BOTH {
                    worst = worst.max(measure(&p, family, kind, index)?.1);
                }
            }
        }
    }
    let mut out = Outcome::new(worst, ctx.samples);
    let r = reference();
    for family in ELKO {
        for kind in KINDS {
            for index in Index::BOTH {
                let (k, _) = measure(&r, family, kind, index)?;
                out = out.with(&format!("phase.{family}{kind}.{index}"), cjson6(k));
            }
        }
    }
    Ok(out)
}

fn check_chiral_helicity_eigen(ctx: &RunContext, s: &mut Sampler) -> Result<Outcome> {
    let cfg = PhaseConfig::default();
    let mut worst = 0.0_f64;
    for p in s.momenta(ctx.samples) {
        let a = p.angles()?;
        let eta = chiral_helicity_operator(&p)?.matrix;
        for family in ELKO {
            for kind in KINDS {
                for index in Index::BOTH {
                    let v = elko_helicity(&p, &a, family, kind, index, &cfg)?.components;
                    let (q, r) = eigen_residual(&eta, &v);
                    let label = chiral_helicity_label(family, index);
                    worst = worst.max(r).max((q - c(label, 0.0)).norm());
                }
            }
        }
    }
    Ok(Outcome::new(worst, ctx.samples)
        .with("eta.lambda.up", json!(chiral_helicity_label(Family::Lambda, Index::Up)))
        .with("eta.rho.up", json!(chiral_helicity_label(Family::Rho, Index::Up))))
}

fn check_helicity_not_eigen(ctx: &RunContext, s: &mut Sampler) -> Result<Outcome> {
    let cfg = PhaseConfig::default();
    let min_over = |p: &FourMomentum| -> Result<f64> {
        let a = p.angles()?;
        let h = helicity_operator(p)?.matrix;
        let mut best = f64::INFINITY;
        for family in ELKO {
            for kind in KINDS {
                for index in Index::BOTH {
                    let v = elko_helicity(p, &a, family, kind, index, &cfg)?.components;
                    best = best.min(eigen_residual(&h, &v).1);
                }
            }
        }
        Ok(best)
    };
    let mut least = f64::INFINITY;
    for p in s.momenta(ctx.samples) {
        least = least.min(min_over(&p)?);
    }
    Ok(Outcome::new(least, ctx.samples).with("reference_residual", json!(round6(min_over(&reference())?))))
}

fn check_parity_lambda(ctx: &RunContext, s: &mut Sampler) -> Result<Outcome> {
    let g0 = gamma0();
    let table = [
        (Kind::S, Index::Up, I),
        (Kind::S, Index::Down, -I),
        (Kind::A, Index::Up, -I),
        (Kind::A, Index::Down, I),
    ];
    let mut worst = 0.0_f64;
    for p in s.momenta(ctx.samples) {
        let pr = parity_reflect(&p);
        for (kind, index, k) in table {
            let lhs = g0.apply(&lambda_spinor(&pr, kind, index)?.components);
            let rhs = lambda_spinor(&p, kind, index.flipped())?.components.scale(k);
            worst = worst.max(rel(&lhs, &rhs));
        }
    }
    Ok(Outcome::new(worst, ctx.samples))
}

fn check_parity_rho(ctx: &RunContext, s: &mut Sampler) -> Result<Outcome> {
    let g0 = gamma0();
    let coefficient = |p: &FourMomentum, kind, index: Index| -> Result<(C64, CVector, CVector)> {
        let lhs = g0.apply(&rho_spinor(&parity_reflect(p), kind, index)?.components);
        let partner = rho_spinor(p, kind, index.flipped())?.components;
        let (k, _) = lhs.projection_residual(&partner);
        Ok((k, lhs, partner))
    };
    let r = reference();
    let mut measured = Vec::new();
    for kind in KINDS {
        for index in Index::BOTH {
            let (k, _, _) = coefficient(&r, kind, index)?;
            measured.push((kind, index, c(round6(k.re), round6(k.im))));
        }
    }
    let mut worst = 0.0_f64;
    for p in s.momenta(ctx.samples) {
        for &(kind, index, k) in &measured {
            let (_, lhs, partner) = coefficient(&p, kind, index)?;
            worst = worst.max(rel(&lhs, &partner.scale(k)));
        }
    }
    let mut out = Outcome::new(worst, ctx.samples);
    for (kind, index, k) in measured {
        out = out.with(&format!("rho{kind}.{index}"), cjson(k));
    }
    Ok(out)
}

fn random_phases(s: &mut Sampler) -> (AngularParams, PhaseConfig) {
    let a = s.angles();
    let cfg = PhaseConfig {
        theta1: s.uniform(0.0, 2.0 * PI),
        theta2: s.uniform(0.0, 2.0 * PI),
        ..Default::default()
    };
    (a, cfg)
}

fn check_two_spinor_reflection(ctx: &RunContext, s: &mut Sampler) -> Result<Outcome> {
    let mut worst = 0.0_f64;
    for _ in 0..ctx.samples {
        let (a, cfg) = random_phases(s);
        let r = a.reflected();
        let plus = helicity_two_spinor(&a, Helicity::Plus, &cfg).components;
        let minus = helicity_two_spinor(&a, Helicity::Minus, &cfg).components;
        let r_minus = helicity_two_spinor(&r, Helicity::Minus, &cfg).components;
        let r_plus = helicity_two_spinor(&r, Helicity::Plus, &cfg).components;
        worst = worst.max(rel(&r_minus, &plus.scale(-I * phase(cfg.theta2 - cfg.theta1))));
        worst = worst.max(rel(&r_plus, &minus.scale(-I * phase(cfg.theta1 - cfg.theta2))));
    }
    Ok(Outcome::new(worst, ctx.samples))
}

fn check_two_spinor_wigner(ctx: &RunContext, s: &mut Sampler) -> Result<Outcome> {
    let theta = wigner_theta_half();
    let mut worst = 0.0_f64;
    for _ in 0..ctx.samples {
        let (a, cfg) = random_phases(s);
        let r = a.reflected();
        let minus = helicity_two_spinor(&a, Helicity::Minus, &cfg).components;
        let plus = helicity_two_spinor(&a, Helicity::Plus, &cfg).components;
        let lhs_m = theta.apply(&helicity_two_spinor(&r, Helicity::Minus, &cfg).components.conj());
        let lhs_p = theta.apply(&helicity_two_spinor(&r, Helicity::Plus, &cfg).components.conj());
        worst = worst.max(rel(&lhs_m, &minus.scale(-I * phase(-2.0 * cfg.theta2))));
        worst = worst.max(rel(&lhs_p, &plus.scale(I * phase(-2.0 * cfg.theta1))));
    }
    Ok(Outcome::new(worst, ctx.samples))
}

fn check_two_spinor_connection(ctx: &RunContext, s: &mut Sampler) -> Result<Outcome> {
    let mut worst = 0.0_f64;
    for _ in 0..ctx.samples {
        let (a, cfg) = random_phases(s);
        let up = helicity_two_spinor(&a, Helicity::Plus, &cfg).components;
        let down = helicity_two_spinor(&a, Helicity::Minus, &cfg).components;
        let u = helicity_connection(a.phi(), cfg.theta1, cfg.theta2);
        worst = worst
            .max(rel(&u.apply(&up), &down))
            .max(rel(&u.adjoint().apply(&down), &up))
            .max(u.unitarity_defect());
    }
    Ok(Outcome::new(worst, ctx.samples))
}

fn check_dirac_equation(ctx: &RunContext, s: &mut Sampler) -> Result<Outcome> {
    let mut worst = 0.0_f64;
    for p in s.momenta(ctx.samples) {
        let g = dirac_matrix(&p);
        let m = p.mass();
        for basis in [Basis::Spinorial, Basis::Helicity] {
            for index in Index::BOTH {
                let u = dirac_spinor(&p, Family::U, index, basis)?.components;
                let v = dirac_spinor(&p, Family::V, index, basis)?.components;
                worst = worst.max((&g.apply(&u) - &u.scale_re(m)).norm() / (m * u.norm()));
                worst = worst.max((&g.apply(&v) + &v.scale_re(m)).norm() / (m * v.norm()));
            }
        }
    }
    Ok(Outcome::new(worst, ctx.samples))
}

fn check_dirac_normalization(ctx: &RunContext, s: &mut Sampler) -> Result<Outcome> {
    let mut worst = 0.0_f64;
    for p in s.momenta(ctx.samples) {
        let m = p.mass();
        for basis in [Basis::Spinorial, Basis::Helicity] {
            for index in Index::BOTH {
                let u = dirac_spinor(&p, Family::U, index, basis)?;
                let v = dirac_spinor(&p, Family::V, index, basis)?;
                worst = worst.max((bar_product(&u, &u) - c(2.0 * m, 0.0)).norm() / (2.0 * m));
                worst = worst.max((bar_product(&v, &v) + c(2.0 * m, 0.0)).norm() / (2.0 * m));
            }
        }
    }
    Ok(Outcome::new(worst, ctx.samples))
}

fn check_bar_self_null(ctx: &RunContext, s: &mut Sampler) -> Result<Outcome> {
    let mut worst = 0.0_f64;
    for p in s.momenta(ctx.samples) {
        for family in ELKO {
            for kind in KINDS {
                for index in Index::BOTH {
                    let b = closed_form(&p, family, kind, index)?;
                    worst = worst.max(bar_product(&b, &b).norm() / p.mass());
                }
            }
        }
    }
    Ok(Outcome::new(worst, ctx.samples))
}

fn check_bar_cross_modulus(ctx: &RunContext, s: &mut Sampler) -> Result<Outcome> {
    let cross = |p: &FourMomentum| -> Result<C64> {
        let up = lambda_spinor(p, Kind::S, Index::Up)?;
        let down = lambda_spinor(p, Kind::S, Index::Down)?;
        Ok(bar_product(&up, &down) / p.mass())
    };
    let mut worst = 0.0_f64;
    for p in s.momenta(ctx.samples) {
        worst = worst.max((cross(&p)?.norm() - 1.0).abs());
    }
    Ok(Outcome::new(worst, ctx.samples).with("lambdaS.up-bar.lambdaS.down_over_m", cjson6(cross(&reference())?)))
}

// ---------------------------------------------------------------------------
// symmetry checks

fn check_c_squared(ctx: &RunContext, s: &mut Sampler) -> Result<Outcome> {
    let mut worst = 0.0_f64;
    for theta_c in theta_c_values(s) {
        let cop = charge_conjugation(&PhaseConfig {
            theta_c,
            ..Default::default()
        });
        for _ in 0..ctx.samples {
            let v = random_vector(s, 4);
            worst = worst.max(rel(&cop.apply(&cop.apply(&v)), &v));
        }
    }
    Ok(Outcome::new(worst, ctx.samples).with("c_squared", json!("+identity")))
}

fn check_c_gamma5(_ctx: &RunContext, s: &mut Sampler) -> Result<Outcome> {
    let mut worst = 0.0_f64;
    let g5 = chirality();
    for theta_c in theta_c_values(s) {
        let cop = charge_conjugation(&PhaseConfig {
            theta_c,
            ..Default::default()
        });
        worst = worst.max(relation_residuals(&cop, &g5).1);
    }
    Ok(Outcome::new(worst, 4))
}

fn operator_pool(s: &mut Sampler, p: &FourMomentum) -> Result<Vec<SymmetryOperator>> {
    let cop = charge_conjugation(&PhaseConfig {
        theta_c: s.uniform(0.0, 2.0 * PI),
        ..Default::default()
    });
    Ok(vec![
        cop,
        parity_operator(),
        chirality(),
        chiral_helicity_operator(p)?,
        SymmetryOperator::new(
            chiral_gauge_transform(s.uniform(-PI, PI), Family::Lambda)?,
            true,
            false,
            phase(s.uniform(0.0, 2.0 * PI)),
        )?,
    ])
}

fn check_composition(ctx: &RunContext, s: &mut Sampler) -> Result<Outcome> {
    let cfg = PhaseConfig::default();
    // spinorial-basis fields depend on p alone; helicity-basis fields pick up
    // a sign under double reflection because the azimuth is not wrapped
    let fields = family_fields(Basis::Spinorial, CpFamily::Elko, cfg);
    let mut worst = 0.0_f64;
    for p in s.momenta(ctx.samples) {
        let pool = operator_pool(s, &p)?;
        let pick = |s: &mut Sampler| pool[(s.uniform(0.0, pool.len() as f64) as usize).min(pool.len() - 1)].clone();
        let (a, b, d) = (pick(s), pick(s), pick(s));
        let left = a.compose(&b).compose(&d);
        let right = a.compose(&b.compose(&d));
        if left.antilinear != right.antilinear || left.reflects_momentum != right.reflects_momentum {
            return Ok(Outcome::new(f64::INFINITY, ctx.samples));
        }
        worst = worst.max(left.effective_matrix().distance(&right.effective_matrix()));
        // composed action agrees with nested action on a field
        let k = MomentumPoint::new(p)?;
        let (_, f) = &fields[(s.uniform(0.0, fields.len() as f64) as usize).min(fields.len() - 1)];
        let composed = a.compose(&b).act(f, &k)?;
        let nested = a.act(|q: &MomentumPoint| b.act(f, q), &k)?;
        worst = worst.max(rel(&composed, &nested));
    }
    Ok(Outcome::new(worst, ctx.samples))
}

fn check_unitary_dets(ctx: &RunContext, s: &mut Sampler) -> Result<Outcome> {
    let mut worst = (u2().det()? + ONE).norm().max((u3().det()? + ONE).norm());
    worst = worst.max(u2().unitarity_defect()).max(u3().unitarity_defect());
    for p in s.momenta(ctx.samples) {
        let u = u1(&p)?;
        worst = worst.max((u.det()? - ONE).norm()).max(u.unitarity_defect());
    }
    Ok(Outcome::new(worst, ctx.samples)
        .with("det_u2", json!(-1.0))
        .with("det_u3", json!(-1.0)))
}

fn check_unitary_helicity(ctx: &RunContext, s: &mut Sampler) -> Result<Outcome> {
    let target = gamma5().scale_re(0.5);
    let mut worst = 0.0_f64;
    for p in s.momenta(ctx.samples) {
        let u = u1(&p)?;
        let h = helicity_operator(&p)?.matrix;
        let d = &(&u * &h) * &u.inverse()?;
        let g = &(&u3() * &d) * &u3().inverse()?;
        worst = worst.max(g.distance(&target));
    }
    Ok(Outcome::new(worst, ctx.samples))
}

fn check_unitary_chiral(ctx: &RunContext, s: &mut Sampler) -> Result<Outcome> {
    let target = gamma5();
    let mut worst = 0.0_f64;
    for p in s.momenta(ctx.samples) {
        let u = u1(&p)?;
        let a = alpha_along(&p)?;
        let d = &(&u * &a) * &u.inverse()?;
        let g = &(&u2() * &d) * &u2().adjoint();
        worst = worst.max(g.distance(&target));
    }
    Ok(Outcome::new(worst, ctx.samples))
}

fn check_xi_intertwines(ctx: &RunContext, s: &mut Sampler) -> Result<Outcome> {
    let mut worst = 0.0_f64;
    for p in s.momenta(ctx.samples) {
        let xi = xi_matrix(&p)?;
        for side in [Side::Right, Side::Left] {
            let b = boost_half(&p, side);
            worst = worst.max((&(&xi * &b) - &(&b.conj() * &xi)).frobenius_norm() / b.frobenius_norm());
        }
    }
    let z_axis = FourMomentum::new(0.0, 0.0, 1.0, 1.0)?;
    let z_dim = match xi_matrix(&z_axis) {
        Err(Error::AmbiguousIntertwiner(d)) => json!(d),
        Ok(_) => json!(1),
        Err(_) => json!(0),
    };
    let along_x = xi_matrix(&FourMomentum::new(2.0, 0.0, 0.0, 1.0)?)?;
    let real = along_x.entries().iter().all(|z| z.im.abs() <= IDENTITY);
    Ok(Outcome::new(worst, ctx.samples)
        .with("z_axis_solution_dimension", z_dim)
        .with("real_along_x", json!(real)))
}

fn xi_images(p: &FourMomentum, phases: Option<&BTreeMap<(XiTransform, Kind), C64>>) -> Result<Vec<(XiTransform, Kind, C64, f64)>> {
    let cfg = PhaseConfig::default();
    let a = p.angles()?;
    let mut out = Vec::new();
    for (t, m) in lambda_basis_transforms(p)? {
        for kind in KINDS {
            let partner = if kind == Kind::S { Kind::A } else { Kind::S };
            for index in Index::BOTH {
                let own = elko_helicity(p, &a, Family::Lambda, kind, index, &cfg)?.components;
                let other = elko_helicity(p, &a, Family::Lambda, partner, index, &cfg)?.components;
                let img = m.apply(&own);
                let target = xi_transform_target(t, &own, &other);
                let (k, r) = match phases.and_then(|ph| ph.get(&(t, kind))) {
                    Some(&k) => (k, rel(&img, &target.scale(k))),
                    None => {
                        let (k, r) = img.projection_residual(&target);
                        (k, r / own.norm())
                    }
                };
                out.push((t, kind, k, r));
            }
        }
    }
    Ok(out)
}

fn check_xi_images(ctx: &RunContext, s: &mut Sampler) -> Result<Outcome> {
    let mut phases = BTreeMap::new();
    for (t, kind, k, _) in xi_images(&reference(), None)? {
        phases.insert((t, kind), c(round6(k.re), round6(k.im)));
    }
    let mut worst = 0.0_f64;
    for p in s.momenta(ctx.samples) {
        if p.magnitude() - p.pz().abs() <= 1e-9 * p.magnitude() {
            continue;
        }
        for (_, _, _, r) in xi_images(&p, Some(&phases))? {
            worst = worst.max(r);
        }
    }
    let mut out = Outcome::new(worst, ctx.samples);
    for ((t, kind), k) in phases {
        out = out.with(&format!("phase.{}.lambda{kind}", t.label()), cjson(k));
    }
    Ok(out)
}

fn check_xi_conjugacy(ctx: &RunContext, s: &mut Sampler) -> Result<Outcome> {
    let cfg = PhaseConfig::default();
    let cop = charge_conjugation(&cfg);
    let mut worst = 0.0_f64;
    for p in s.momenta(ctx.samples) {
        let a = p.angles()?;
        for (_, m) in lambda_basis_transforms(&p)? {
            for kind in KINDS {
                for index in Index::BOTH {
                    for v in [
                        lambda_spinor(&p, kind, index)?.components,
                        elko_helicity(&p, &a, Family::Lambda, kind, index, &cfg)?.components,
                    ] {
                        let img = m.apply(&v);
                        worst = worst.max(rel(&cop.apply(&img), &img.scale_re(c_sign_of(kind))));
                    }
                }
            }
        }
    }
    Ok(Outcome::new(worst, ctx.samples))
}

/// Sign the mass term picks up when one Xi block transform acts on all four fields.
fn xi_mass_signs(p: &FourMomentum, f: &MassTermFields) -> Result<Vec<(XiTransform, f64, f64)>> {
    let base = lagrangian_mass_term(f, p.mass());
    let scale = mass_scale(f, p.mass());
    let mut out = Vec::new();
    for (t, m) in lambda_basis_transforms(p)? {
        let after = lagrangian_mass_term(&f.transformed(&m, &m), p.mass());
        let sign = if (after - base).norm() <= (after + base).norm() { 1.0 } else { -1.0 };
        out.push((t, sign, (after - base * sign).norm() / scale));
    }
    Ok(out)
}

fn check_xi_mass_term(ctx: &RunContext, s: &mut Sampler) -> Result<Outcome> {
    let r = reference();
    let f = MassTermFields::superposed(&r, [[0.3, -0.7], [0.5, 0.2], [-0.4, 0.9], [0.1, 0.6]])?;
    let signs: Vec<(XiTransform, f64)> = xi_mass_signs(&r, &f)?.into_iter().map(|(t, s, _)| (t, s)).collect();
    let mut worst = 0.0_f64;
    let mut matched = true;
    for p in s.momenta(ctx.samples) {
        let f = MassTermFields::superposed(&p, random_weights(s))?;
        for ((_, sign, res), (_, want)) in xi_mass_signs(&p, &f)?.into_iter().zip(&signs) {
            matched &= sign == *want;
            worst = worst.max(res);
        }
    }
    let mut out = Outcome::new(worst, ctx.samples).matched(matched);
    for (t, sign) in signs {
        out = out.with(&format!("sign.{}", t.label()), json!(sign));
    }
    Ok(out)
}

fn check_chiral_gauge_conjugacy(ctx: &RunContext, s: &mut Sampler) -> Result<Outcome> {
    let cop = charge_conjugation(&PhaseConfig::default());
    let mut worst = 0.0_f64;
    for p in s.momenta(ctx.samples) {
        for _ in 0..20 {
            let alpha = s.uniform(-PI, PI);
            for family in ELKO {
                let g = chiral_gauge_transform(alpha, family)?;
                for kind in KINDS {
                    for index in Index::BOTH {
                        let v = g.apply(&closed_form(&p, family, kind, index)?.components);
                        worst = worst.max(rel(&cop.apply(&v), &v.scale_re(c_sign_of(kind))));
                    }
                }
            }
        }
    }
    Ok(Outcome::new(worst, ctx.samples * 20))
}

fn check_chiral_gauge_mass_term(ctx: &RunContext, s: &mut Sampler) -> Result<Outcome> {
    let mut worst = 0.0_f64;
    for p in s.momenta(ctx.samples) {
        let f = MassTermFields::superposed(&p, random_weights(s))?;
        let base = lagrangian_mass_term(&f, p.mass());
        let scale = mass_scale(&f, p.mass());
        for _ in 0..20 {
            let alpha = s.uniform(-PI, PI);
            let g = f.transformed(
                &chiral_gauge_transform(alpha, Family::Lambda)?,
                &chiral_gauge_transform(alpha, Family::Rho)?,
            );
            worst = worst.max((lagrangian_mass_term(&g, p.mass()) - base).norm() / scale);
        }
    }
    Ok(Outcome::new(worst, ctx.samples * 20))
}

fn random_su2(s: &mut Sampler) -> Result<CMatrix> {
    su2_from_angle(s.uniform(-PI, PI), s.unit_vector())
}

fn check_su2_closure(ctx: &RunContext, s: &mut Sampler) -> Result<Outcome> {
    let mut worst = 0.0_f64;
    for _ in 0..ctx.samples {
        let (a, b) = (random_su2(s)?, random_su2(s)?);
        let ab = &a * &b;
        worst = worst.max(ab.unitarity_defect()).max((ab.det()? - ONE).norm());
        // the product is again of the form c0 + i tau.c with real (c0, c)
        let c0 = ab.trace() / 2.0;
        let [t1, t2, t3] = crate::matrix::pauli();
        let cv = [t1, t2, t3].map(|t| (&t * &ab).trace() / c(0.0, 2.0));
        let imag = c0.im.abs() + cv.iter().map(|z| z.im.abs()).sum::<f64>();
        let rebuilt = crate::symmetry::su2_phase_transform(c0.re, cv.map(|z| z.re))?;
        worst = worst.max(imag).max(rebuilt.distance(&ab));
        let (x, y) = (s.uniform(-PI, PI), s.uniform(-PI, PI));
        let z = [0.0, 0.0, 1.0];
        let lhs = &su2_from_angle(x, z)? * &su2_from_angle(y, z)?;
        worst = worst.max(lhs.distance(&su2_from_angle(x + y, z)?));
    }
    Ok(Outcome::new(worst, ctx.samples))
}

fn check_su2_mass_term(ctx: &RunContext, s: &mut Sampler) -> Result<Outcome> {
    let mut worst = 0.0_f64;
    for p in s.momenta(ctx.samples) {
        let f = MassTermFields::superposed(&p, random_weights(s))?;
        let base = lagrangian_mass_term(&f, p.mass());
        let u = random_su2(s)?;
        let g = f.su2_rotated(&u);
        worst = worst.max((lagrangian_mass_term(&g, p.mass()) - base).norm() / mass_scale(&f, p.mass()));
    }
    Ok(Outcome::new(worst, ctx.samples))
}

fn relation_name(r: Relation) -> &'static str {
    match r {
        Relation::Commute => "commute",
        Relation::Anticommute => "anticommute",
        Relation::Neither => "neither",
    }
}

fn check_cp_dirac(ctx: &RunContext, s: &mut Sampler) -> Result<Outcome> {
    let momenta = s.momenta(ctx.samples);
    let mut worst = 0.0_f64;
    let mut matched = true;
    let mut out = Outcome::new(0.0, ctx.samples);
    for (basis, name) in [(Basis::Spinorial, "spinorial"), (Basis::Helicity, "helicity")] {
        let r = classify_cp_action(basis, CpFamily::Dirac, &momenta, &PhaseConfig::default())?;
        worst = worst.max(r.anticommute_residual);
        matched &= r.relation == Relation::Anticommute && r.commute_residual > NONEXISTENCE_FLOOR;
        out = out.with(&format!("relation.{name}"), json!(relation_name(r.relation)));
    }
    out.residual = worst;
    Ok(out.matched(matched))
}

fn check_cp_elko_helicity(ctx: &RunContext, s: &mut Sampler) -> Result<Outcome> {
    let momenta = s.momenta(ctx.samples);
    let r = classify_cp_action(Basis::Helicity, CpFamily::Elko, &momenta, &PhaseConfig::default())?;
    let matched = r.relation == Relation::Commute && r.anticommute_residual > NONEXISTENCE_FLOOR;
    Ok(Outcome::new(r.commute_residual, ctx.samples)
        .matched(matched)
        .with("relation", json!(relation_name(r.relation))))
}

fn check_helicity_parity(ctx: &RunContext, s: &mut Sampler) -> Result<Outcome> {
    let cfg = PhaseConfig::default();
    let g0 = gamma0();
    let mut worst = 0.0_f64;
    let mut fields = family_fields(Basis::Helicity, CpFamily::Elko, cfg);
    fields.extend(family_fields(Basis::Helicity, CpFamily::Dirac, cfg));
    for p in s.momenta(ctx.samples) {
        let k = MomentumPoint::new(p)?;
        let kr = k.reflected();
        let h = helicity_operator(&k.p)?.matrix;
        let hr = helicity_operator(&kr.p)?.matrix;
        for (_, f) in &fields {
            let v = f(&kr)?;
            // P(h psi)(k) = gamma0 h(k') psi(k'),  h(P psi)(k) = h(k) gamma0 psi(k')
            let a = g0.apply(&hr.apply(&v));
            let b = h.apply(&g0.apply(&v));
            worst = worst.max((&a + &b).norm() / v.norm());
        }
    }
    Ok(Outcome::new(worst, ctx.samples))
}

// ---------------------------------------------------------------------------
// dynamics checks

fn check_convention(ctx: &RunContext, s: &mut Sampler) -> Result<Outcome> {
    let momenta = s.momenta(ctx.samples);
    let d = discover_convention(&momenta)?;
    let (conv, residual, matched) = match ctx.forced_convention {
        Some(f) => {
            let r = match f {
                FrequencyConvention::Plus => d.plus_max,
                FrequencyConvention::Minus => d.minus_max,
            };
            (Some(f), r, d.convention == Some(f))
        }
        None => {
            let r = match d.convention {
                Some(FrequencyConvention::Plus) => d.plus_max,
                Some(FrequencyConvention::Minus) => d.minus_max,
                None => d.plus_max.min(d.minus_max),
            };
            (d.convention, r, d.convention.is_some())
        }
    };
    Ok(Outcome::new(residual, ctx.samples)
        .matched(matched)
        .with("convention", json!(conv.map(|c| c.to_string()))))
}

fn check_convention_floor(ctx: &RunContext, s: &mut Sampler) -> Result<Outcome> {
    let conv = effective_convention(ctx, s)?;
    let mut least = f64::INFINITY;
    for p in s.momenta(ctx.samples) {
        let r = dynamics::coupled_system_residual(&p, conv.opposite())?;
        least = least.min(r.iter().fold(0.0_f64, |a, &b| a.max(b)) / p.mass());
    }
    Ok(Outcome::new(least, ctx.samples))
}

fn check_dirac_square(ctx: &RunContext, s: &mut Sampler) -> Result<Outcome> {
    let mut worst = 0.0_f64;
    for p in s.momenta(ctx.samples) {
        let g = dirac_matrix(&p);
        let m2 = p.mass() * p.mass();
        worst = worst.max((&g * &g).distance(&CMatrix::identity(4).scale_re(m2)) / (p.energy() * p.energy()));
    }
    Ok(Outcome::new(worst, ctx.samples))
}

fn check_markov_coupled(ctx: &RunContext, s: &mut Sampler) -> Result<Outcome> {
    let mut worst = 0.0_f64;
    for p in s.momenta(ctx.samples) {
        for index in Index::BOTH {
            let (chi, eta) = markov_superposition(&p, index)?;
            let (a, b) = markov_residual(&p, &chi, &eta);
            worst = worst.max(a.max(b) / p.mass());
        }
    }
    Ok(Outcome::new(worst, ctx.samples))
}

fn check_markov_span(ctx: &RunContext, s: &mut Sampler) -> Result<Outcome> {
    let fit = |p: &FourMomentum| -> Result<(Vec<C64>, Vec<C64>, f64)> {
        let mut basis = Vec::new();
        for fam in [Family::U, Family::V] {
            for index in Index::BOTH {
                basis.push(dirac_spinor(p, fam, index, Basis::Spinorial)?.components);
            }
        }
        let (chi, eta) = markov_superposition(p, Index::Up)?;
        let (kc, rc) = span_fit(&basis, &chi)?;
        let (ke, re) = span_fit(&basis, &eta)?;
        Ok((kc, ke, rc.max(re)))
    };
    let mut worst = 0.0_f64;
    for p in s.momenta(ctx.samples) {
        worst = worst.max(fit(&p)?.2);
    }
    let (kc, ke, _) = fit(&reference())?;
    let enc = |k: Vec<C64>| json!(k.into_iter().map(cjson6).collect::<Vec<_>>());
    Ok(Outcome::new(worst, ctx.samples)
        .with("chi_in_u_up_u_down_v_up_v_down", enc(kc))
        .with("eta_in_u_up_u_down_v_up_v_down", enc(ke)))
}

/// `k` with `k^2 = shell`, direction and `|k|` random; `|k|` is kept above `sqrt(-shell)` if spacelike.
fn shell_vector(s: &mut Sampler, shell: f64, scale: f64) -> FourVector {
    let n = s.unit_vector();
    let lo = if shell < 0.0 { (-shell).sqrt() * 1.01 } else { 0.01 * scale };
    let k = s.uniform(lo, lo + 10.0 * scale);
    let e = (k * k + shell).max(0.0).sqrt();
    FourVector::new(e, n.map(|x| x * k))
}

fn check_sen_gupta_dimension(ctx: &RunContext, s: &mut Sampler) -> Result<Outcome> {
    let reference_k = FourVector::new(2.0, [0.0, 0.0, 1.0]);
    let ref_dim = sen_gupta_null_space(&reference_k, 2.0, 1.0).len();
    let mut matched = ref_dim == 2;
    let mut worst = 0.0_f64;
    for _ in 0..ctx.samples {
        let m1 = s.mass();
        let m2 = m1 * s.uniform(-0.95, 0.95);
        let k = shell_vector(s, m1 * m1 - m2 * m2, m1);
        let basis = sen_gupta_null_space(&k, m1, m2);
        matched &= basis.len() == 2;
        for v in &basis {
            worst = worst.max(sen_gupta_residual(&k, m1, m2, v) / m1);
        }
    }
    let off_shell = sen_gupta_null_space(&reference_k, 2.0, 0.5).len();
    Ok(Outcome::new(worst, ctx.samples)
        .matched(matched && off_shell == 0)
        .with("null_dimension", json!(ref_dim))
        .with("off_shell_dimension", json!(off_shell)))
}

fn check_sen_gupta_equivalence(ctx: &RunContext, s: &mut Sampler) -> Result<Outcome> {
    let mut worst = 0.0_f64;
    for _ in 0..ctx.samples {
        let m1 = s.mass();
        let m2 = m1 * s.uniform(-0.95, 0.95);
        let k = shell_vector(s, m1 * m1 - m2 * m2, m1);
        let t = sen_gupta_equivalence(m1, m2)?;
        let mass = sen_gupta_dirac_mass(m1, m2);
        let basis = sen_gupta_null_space(&k, m1, m2);
        if basis.is_empty() {
            return Ok(Outcome::new(f64::INFINITY, ctx.samples));
        }
        for v in basis {
            let w = t.apply(&v);
            worst = worst.max(sen_gupta_residual(&k, mass, 0.0, &w) / m1);
        }
    }
    Ok(Outcome::new(worst, ctx.samples))
}

fn check_sen_gupta_spacelike(ctx: &RunContext, s: &mut Sampler) -> Result<Outcome> {
    let mut least = f64::INFINITY;
    for _ in 0..ctx.samples {
        let m2 = s.mass();
        let k = shell_vector(s, -m2 * m2, m2);
        let study = sen_gupta_chirality_study(&k, 0.0, m2)?;
        if study.null_dimension == 0 {
            return Ok(Outcome::new(0.0, ctx.samples));
        }
        // the distance to an eigenstate falls off like m2/|k|; compare it on that scale
        least = least.min(study.min_eigen_residual * k.magnitude() / m2);
    }
    let reference_k = FourVector::new((4.0_f64 - 1.69).sqrt(), [1.2, 1.6, 0.0]);
    let r = sen_gupta_chirality_study(&reference_k, 0.0, 1.3)?;
    Ok(Outcome::new(least, ctx.samples).with("reference_min_eigen_residual", json!(round6(r.min_eigen_residual))))
}

fn check_sen_gupta_lightlike(ctx: &RunContext, s: &mut Sampler) -> Result<Outcome> {
    let mut worst = 0.0_f64;
    let mut matched = true;
    for _ in 0..ctx.samples {
        let m = s.mass();
        let sign = if s.uniform(0.0, 1.0) < 0.5 { 1.0 } else { -1.0 };
        let k = shell_vector(s, 0.0, m);
        let basis = sen_gupta_null_space(&k, m, sign * m);
        matched &= basis.len() == 2;
        for v in &basis {
            worst = worst.max(sen_gupta_residual(&k, m, sign * m, v) / m);
        }
    }
    let reference_k = FourVector::new(2.0, [1.2, 1.6, 0.0]);
    let study = sen_gupta_chirality_study(&reference_k, 1.3, 1.3)?;
    Ok(Outcome::new(worst, ctx.samples)
        .matched(matched)
        .with("null_dimension", json!(study.null_dimension))
        .with("contains_chirality_eigenstate", json!(study.min_eigen_residual < 1e-6))
        .with("solution_space_invariant", json!(study.invariance_defect < 1e-6)))
}

fn check_eight_component(ctx: &RunContext, s: &mut Sampler) -> Result<Outcome> {
    let conv = effective_convention(ctx, s)?;
    let mut worst = 0.0_f64;
    for p in s.momenta(ctx.samples) {
        worst = worst.max(eight_component_residual(&p, conv, 0.0)?);
    }
    Ok(Outcome::new(worst, ctx.samples))
}

fn check_eight_component_axial(ctx: &RunContext, s: &mut Sampler) -> Result<Outcome> {
    let conv = effective_convention(ctx, s)?;
    let mut worst = 0.0_f64;
    for p in s.momenta(ctx.samples) {
        for _ in 0..20 {
            worst = worst.max(eight_component_residual(&p, conv, s.uniform(-PI, PI))?);
        }
    }
    Ok(Outcome::new(worst, ctx.samples * 20))
}

fn check_lambda5_structure(ctx: &RunContext, s: &mut Sampler) -> Result<Outcome> {
    let l5 = lambda5();
    let mut worst = (&l5 * &l5).distance(&CMatrix::identity(8));
    let mut kinetic = Relation::Anticommute;
    let mut mass = Relation::Anticommute;
    for p in s.momenta(ctx.samples) {
        let (kin, m) = eight_component_parts(&p);
        let e = p.energy();
        let (kc, ka) = (l5.commutator(&kin).max_abs() / e, l5.anticommutator(&kin).max_abs() / e);
        let (mc, ma) = (l5.commutator(&m).max_abs(), l5.anticommutator(&m).max_abs());
        worst = worst.max(ka).max(ma);
        if !(ka <= IDENTITY && kc > NONEXISTENCE_FLOOR) {
            kinetic = Relation::Neither;
        }
        if !(ma <= IDENTITY && mc > NONEXISTENCE_FLOOR) {
            mass = Relation::Neither;
        }
    }
    Ok(Outcome::new(worst, ctx.samples)
        .matched(kinetic == Relation::Anticommute && mass == Relation::Anticommute)
        .with("kinetic", json!(relation_name(kinetic)))
        .with("mass", json!(relation_name(mass))))
}

fn check_mass_term_real(ctx: &RunContext, s: &mut Sampler) -> Result<Outcome> {
    let mut worst = 0.0_f64;
    for p in s.momenta(ctx.samples) {
        let f = MassTermFields::superposed(&p, random_weights(s))?;
        worst = worst.max(lagrangian_mass_term(&f, p.mass()).im.abs() / mass_scale(&f, p.mass()));
    }
    let r = reference();
    let single = lagrangian_mass_term(&MassTermFields::at(&r, Index::Up)?, r.mass());
    Ok(Outcome::new(worst, ctx.samples).with("single_index_value", json!(round6(single.norm()))))
}

// ---------------------------------------------------------------------------
// spin-one checks

fn check_theta_one(_ctx: &RunContext, _s: &mut Sampler) -> Result<Outcome> {
    let t = wigner_theta_one();
    let ti = t.inverse()?;
    let mut worst = 0.0_f64;
    for j in generators() {
        worst = worst.max((&(&t * &j) * &ti).distance(&-&j.conj()));
    }
    worst = worst
        .max((&t * &t.transpose()).distance(&CMatrix::identity(3)))
        .max(t.distance(&t.transpose()));
    Ok(Outcome::new(worst, 3))
}

fn check_theta_squares(_ctx: &RunContext, _s: &mut Sampler) -> Result<Outcome> {
    let t1 = wigner_theta_one();
    let th = wigner_theta_half();
    let r = (&t1 * &t1)
        .distance(&CMatrix::identity(3))
        .max((&th * &th).distance(&CMatrix::identity(2).scale_re(-1.0)));
    Ok(Outcome::new(r, 1)
        .with("theta_one_squared", json!("+identity"))
        .with("theta_half_squared", json!("-identity")))
}

fn vartheta_values(s: &mut Sampler) -> [f64; 4] {
    [0.0, PI / 2.0, PI, s.uniform(0.0, 2.0 * PI)]
}

fn check_sc_squared(ctx: &RunContext, s: &mut Sampler) -> Result<Outcome> {
    let mut worst = 0.0_f64;
    for vt in vartheta_values(s) {
        let op = sc_one(vt);
        for _ in 0..ctx.samples {
            let v = random_vector(s, 6);
            worst = worst.max(rel(&op.apply(&op.apply(&v)), &v.scale_re(-1.0)));
        }
    }
    Ok(Outcome::new(worst, ctx.samples * 4).with("sc_squared", json!("-identity")))
}

fn check_gamma5_sc_squared(ctx: &RunContext, s: &mut Sampler) -> Result<Outcome> {
    let mut worst = 0.0_f64;
    for vt in vartheta_values(s) {
        let op = gamma5_sc_one(vt);
        for _ in 0..ctx.samples {
            let v = random_vector(s, 6);
            worst = worst.max(rel(&op.apply(&op.apply(&v)), &v));
        }
    }
    Ok(Outcome::new(worst, ctx.samples * 4).with("gamma5_sc_squared", json!("+identity")))
}

fn check_gamma5_sc_anticommute(_ctx: &RunContext, s: &mut Sampler) -> Result<Outcome> {
    let g5 = gamma5_one();
    let mut worst = 0.0_f64;
    for vt in vartheta_values(s) {
        let m = sc_one(vt).matrix;
        worst = worst.max(g5.anticommutator(&m).max_abs());
    }
    Ok(Outcome::new(worst, 4))
}

/// Rest frame plus up to 20 boosted momenta, with random angles and all helicities.
fn spin_one_points(ctx: &RunContext, s: &mut Sampler) -> Result<Vec<(FourMomentum, AngularParams)>> {
    let mut pts = vec![(FourMomentum::at_rest(s.mass())?, s.angles())];
    for p in s.momenta(ctx.samples.min(20)) {
        pts.push((p, p.angles()?));
    }
    Ok(pts)
}

fn scans(
    pts: &[(FourMomentum, AngularParams)],
    choice: ConjugationChoice,
    vartheta: f64,
) -> Vec<ScanReport> {
    let cfg = PhaseConfig::default();
    pts.par_iter()
        .flat_map_iter(|(p, a)| {
            Helicity1::ALL
                .into_iter()
                .map(move |h| spin1_conjugacy_scan(p, choice, a, h, &cfg, vartheta))
        })
        .collect()
}

fn check_gamma5_sc_minima(ctx: &RunContext, s: &mut Sampler) -> Result<Outcome> {
    let pts = spin_one_points(ctx, s)?;
    let mut worst = 0.0_f64;
    for r in scans(&pts, ConjugationChoice::Gamma5Sc, 0.0) {
        for (min, target) in [
            (r.lambda_self, ONE),
            (r.lambda_anti, -ONE),
            (r.rho_self, ONE),
            (r.rho_anti, -ONE),
        ] {
            worst = worst.max(min.residual).max((min.zeta - target).norm());
        }
    }
    let rest = FourMomentum::at_rest(1.0)?;
    let a = AngularParams::new(0.7, 2.0)?;
    let r = spin1_conjugacy_scan(&rest, ConjugationChoice::Gamma5Sc, &a, Helicity1::Plus, &PhaseConfig::default(), 0.0);
    Ok(Outcome::new(worst, pts.len() * 3)
        .with("zeta.lambda.self", cjson6(r.lambda_self.zeta))
        .with("zeta.lambda.anti", cjson6(r.lambda_anti.zeta))
        .with("zeta.rho.self", cjson6(r.rho_self.zeta))
        .with("zeta.rho.anti", cjson6(r.rho_anti.zeta)))
}

fn check_sc_no_solution(ctx: &RunContext, s: &mut Sampler) -> Result<Outcome> {
    let pts = spin_one_points(ctx, s)?;
    let mut least = f64::INFINITY;
    for r in scans(&pts, ConjugationChoice::Sc, 0.0) {
        for min in [r.lambda_self, r.lambda_anti, r.rho_self, r.rho_anti] {
            least = least.min(min.residual);
        }
    }
    Ok(Outcome::new(least, pts.len() * 3))
}

fn check_scan_phase_covariance(ctx: &RunContext, s: &mut Sampler) -> Result<Outcome> {
    let cfg = PhaseConfig::default();
    let mut worst = 0.0_f64;
    let n = ctx.samples.min(20);
    for p in s.momenta(n) {
        let a = p.angles()?;
        let vt = s.uniform(0.0, 2.0 * PI);
        let base = spin1_conjugacy_scan(&p, ConjugationChoice::Gamma5Sc, &a, Helicity1::Zero, &cfg, 0.0);
        let shifted = spin1_conjugacy_scan(&p, ConjugationChoice::Gamma5Sc, &a, Helicity1::Zero, &cfg, vt);
        worst = worst
            .max((shifted.lambda_self.zeta - base.lambda_self.zeta * phase(vt)).norm())
            .max((shifted.lambda_anti.zeta - base.lambda_anti.zeta * phase(vt)).norm());
    }
    Ok(Outcome::new(worst, n))
}

fn check_rho_lambda_relation(ctx: &RunContext, s: &mut Sampler) -> Result<Outcome> {
    let cfg = PhaseConfig::default();
    let relation = |p: &FourMomentum, a: &AngularParams, h: Helicity1| {
        let lam = spin1_lambda(p, ONE, a, h, &cfg);
        let rho = spin1_rho(p, ONE, a, opposite(h), &cfg);
        let (k, r) = spin_one::rho_lambda_relation(&rho, &lam);
        (k, r / rho.components.norm())
    };
    let r = reference();
    let ra = r.angles()?;
    let measured: Vec<(Helicity1, C64)> = Helicity1::ALL
        .into_iter()
        .map(|h| {
            let (k, _) = relation(&r, &ra, h);
            (h, c(round6(k.re), round6(k.im)))
        })
        .collect();
    let mut worst = 0.0_f64;
    for p in s.momenta(ctx.samples) {
        let a = p.angles()?;
        for &(h, k) in &measured {
            let lam = spin1_lambda(&p, ONE, &a, h, &cfg);
            let rho = spin1_rho(&p, ONE, &a, opposite(h), &cfg);
            worst = worst.max(rel(&rho.components, &lam.components.scale(k)));
        }
    }
    let mut out = Outcome::new(worst, ctx.samples);
    for (h, k) in measured {
        out = out.with(&format!("rho_over_lambda.opposite-helicity.{}", h.value()), cjson(k));
    }
    Ok(out)
}

fn opposite(h: Helicity1) -> Helicity1 {
    match h {
        Helicity1::Plus => Helicity1::Minus,
        Helicity1::Zero => Helicity1::Zero,
        Helicity1::Minus => Helicity1::Plus,
    }
}

// ---------------------------------------------------------------------------

macro_rules! check {
    ($id:expr, $suite:ident, $exp:ident, $tol:expr, $f:ident, $anchor:expr) => {
        CheckSpec {
            id: $id,
            anchor: $anchor,
            suite: SuiteName::$suite,
            expectation: Expectation::$exp,
            tolerance: $tol,
            run: $f,
        }
    };
}

/// Every check, in report order.
pub fn registry() -> Vec<CheckSpec> {
    vec![
        check!("spin-half.conjugacy.lambda", SpinHalf, Vanish, IDENTITY, check_conjugacy_lambda,
            "C maps boosted lambda^S to +lambda^S and lambda^A to -lambda^A"),
        check!("spin-half.conjugacy.rho", SpinHalf, Vanish, IDENTITY, check_conjugacy_rho,
            "C maps boosted rho^S to +rho^S and rho^A to -rho^A"),
        check!("spin-half.conjugacy.helicity-basis", SpinHalf, Vanish, IDENTITY, check_conjugacy_helicity_basis,
            "helicity-basis lambda and rho are C eigenspinors for every phase of C"),
        check!("spin-half.conjugacy.dirac-image", SpinHalf, Vanish, IDENTITY, check_dirac_image,
            "C maps u spinors into the span of v spinors and back"),
        check!("spin-half.rest-frame", SpinHalf, Vanish, IDENTITY, check_rest_frame,
            "closed-form lambda and rho at zero momentum equal the rest-frame spinors"),
        check!("spin-half.rest-limit", SpinHalf, Vanish, 1e-7, check_rest_limit,
            "closed-form lambda and rho approach the rest-frame spinors as |p| -> 0"),
        check!("spin-half.boost-consistency", SpinHalf, Vanish, IDENTITY, check_boost_consistency,
            "chiral boosts of the rest-frame spinors give the closed forms up to a phase"),
        check!("spin-half.chiral-helicity.eigen", SpinHalf, Vanish, IDENTITY, check_chiral_helicity_eigen,
            "helicity-basis lambda and rho are eigenspinors of eta = -gamma5 h with eigenvalue +-1/2"),
        check!("spin-half.helicity.not-eigen", SpinHalf, ExceedFloor, NONEXISTENCE_FLOOR, check_helicity_not_eigen,
            "lambda and rho are not eigenspinors of the helicity operator"),
        check!("spin-half.parity.lambda", SpinHalf, Vanish, IDENTITY, check_parity_lambda,
            "gamma0 lambda(p') = +-i lambda with the opposite index, p' = (E, -p)"),
        check!("spin-half.parity.rho", SpinHalf, Vanish, IDENTITY, check_parity_rho,
            "gamma0 rho(p') is a fixed multiple of rho with the opposite index"),
        check!("spin-half.two-spinor.reflection", SpinHalf, Vanish, IDENTITY, check_two_spinor_reflection,
            "space inversion maps phi- to -i e^{i(t2-t1)} phi+ and phi+ to -i e^{i(t1-t2)} phi-"),
        check!("spin-half.two-spinor.wigner-reflection", SpinHalf, Vanish, IDENTITY, check_two_spinor_wigner,
            "R Theta phi-* = -i e^{-2i t2} phi- and R Theta phi+* = +i e^{-2i t1} phi+"),
        check!("spin-half.two-spinor.connection", SpinHalf, Vanish, IDENTITY, check_two_spinor_connection,
            "a unitary matrix with entries e^{-+i phi} maps the up helicity 2-spinor to the down one"),
        check!("spin-half.dirac.equation", SpinHalf, Vanish, IDENTITY, check_dirac_equation,
            "u solves (gamma.p - m)u = 0 and v solves (gamma.p + m)v = 0"),
        check!("spin-half.dirac.normalization", SpinHalf, Vanish, IDENTITY, check_dirac_normalization,
            "u-bar u = 2m and v-bar v = -2m"),
        check!("spin-half.bar.self-null", SpinHalf, Vanish, IDENTITY, check_bar_self_null,
            "every lambda and rho has vanishing Dirac self-norm"),
        check!("spin-half.bar.cross-modulus", SpinHalf, Vanish, IDENTITY, check_bar_cross_modulus,
            "the cross norm of lambda^S up and down has modulus m"),
        check!("symmetry.c-squared", Symmetry, Vanish, ALGEBRAIC, check_c_squared,
            "charge conjugation squares to the identity on 4-spinors"),
        check!("symmetry.c-gamma5", Symmetry, Vanish, ALGEBRAIC, check_c_gamma5,
            "charge conjugation anticommutes with gamma5"),
        check!("symmetry.composition", Symmetry, Vanish, IDENTITY, check_composition,
            "operator composition is associative and agrees with nested action on fields"),
        check!("symmetry.unitary-chain.determinants", Symmetry, Vanish, IDENTITY, check_unitary_dets,
            "det U1 = 1, det U2 = det U3 = -1, all unitary"),
        check!("symmetry.unitary-chain.helicity", Symmetry, Vanish, IDENTITY, check_unitary_helicity,
            "U1 then U3 turns the helicity operator into gamma5 / 2"),
        check!("symmetry.unitary-chain.chiral-helicity", Symmetry, Vanish, IDENTITY, check_unitary_chiral,
            "U1 then U2 turns alpha . n into diag(1, 1, -1, -1)"),
        check!("symmetry.xi.intertwines", Symmetry, Vanish, IDENTITY, check_xi_intertwines,
            "Xi conjugates both chiral boosts into their complex conjugates"),
        check!("symmetry.xi.images", Symmetry, Vanish, IDENTITY, check_xi_images,
            "the four Xi block transforms send lambda to lambda*, -i lambda*, i gamma0 lambda*, gamma0 lambda*"),
        check!("symmetry.xi.conjugacy", Symmetry, Vanish, IDENTITY, check_xi_conjugacy,
            "the Xi block transforms keep lambda in its self or anti-self conjugate space"),
        check!("symmetry.xi.mass-term", Symmetry, Classify, IDENTITY, check_xi_mass_term,
            "each Xi block transform multiplies the mass term by a fixed sign"),
        check!("symmetry.chiral-gauge.conjugacy", Symmetry, Vanish, IDENTITY, check_chiral_gauge_conjugacy,
            "axial phase rotations keep lambda and rho self or anti-self conjugate"),
        check!("symmetry.chiral-gauge.mass-term", Symmetry, Vanish, IDENTITY, check_chiral_gauge_mass_term,
            "the lambda-rho mass term is invariant under axial phase rotations"),
        check!("symmetry.su2.closure", Symmetry, Vanish, ALGEBRAIC, check_su2_closure,
            "c0 + i tau . c transforms close into SU(2) under composition"),
        check!("symmetry.su2.mass-term", Symmetry, Vanish, IDENTITY, check_su2_mass_term,
            "the mass term is invariant under SU(2) rotation of the paired doublets"),
        check!("symmetry.cp.dirac", Symmetry, Classify, IDENTITY, check_cp_dirac,
            "C and P anticommute on Dirac u and v spinors"),
        check!("symmetry.cp.elko-helicity", Symmetry, Classify, IDENTITY, check_cp_elko_helicity,
            "C and P commute on helicity-basis self/anti-self conjugate spinors"),
        check!("symmetry.helicity-parity", Symmetry, Vanish, IDENTITY, check_helicity_parity,
            "the helicity operator anticommutes with parity on helicity-basis spinors"),
        check!(CONVENTION_ID, Dynamics, Classify, IDENTITY, check_convention,
            "exactly one plane-wave association solves all four coupled lambda-rho equations"),
        check!("dynamics.convention.opposite-floor", Dynamics, ExceedFloor, 0.5, check_convention_floor,
            "the other association leaves residuals above m/2"),
        check!("dynamics.dirac-matrix", Dynamics, Vanish, IDENTITY, check_dirac_square,
            "(gamma.p)^2 = m^2 on shell"),
        check!("dynamics.markov.coupled", Dynamics, Vanish, IDENTITY, check_markov_coupled,
            "sum and difference of opposite-mass Dirac solutions solve the cross-coupled pair"),
        check!("dynamics.markov.span", Dynamics, Vanish, IDENTITY, check_markov_span,
            "the cross-coupled solutions are superpositions of u and v"),
        check!("dynamics.sen-gupta.dimension", Dynamics, Classify, IDENTITY, check_sen_gupta_dimension,
            "the two-mass operator has a two-dimensional kernel on its shell and none off it"),
        check!("dynamics.sen-gupta.equivalence", Dynamics, Vanish, IDENTITY, check_sen_gupta_equivalence,
            "exp(gamma5 beta/2) maps two-mass solutions to Dirac solutions of mass sqrt(m1^2 - m2^2)"),
        check!("dynamics.sen-gupta.not-chirality-eigen", Dynamics, ExceedFloor, NONEXISTENCE_FLOOR, check_sen_gupta_spacelike,
            "with m1 = 0 no two-mass solution is an eigenstate of alpha . n, by a margin of order m2/|k|"),
        check!("dynamics.sen-gupta.lightlike", Dynamics, Classify, IDENTITY, check_sen_gupta_lightlike,
            "with m1 = +-m2 the two-mass operator has a two-dimensional kernel on the light cone"),
        check!("dynamics.eight-component", Dynamics, Vanish, IDENTITY, check_eight_component,
            "the 8-component operator annihilates the (lambda^S, rho^A) and (lambda^A, rho^S) stacks"),
        check!("dynamics.eight-component.axial", Dynamics, Vanish, IDENTITY, check_eight_component_axial,
            "axially rotated stacks still solve the 8-component equation"),
        check!("dynamics.eight-component.lambda5", Dynamics, Classify, IDENTITY, check_lambda5_structure,
            "diag(gamma5, -gamma5) squares to one and anticommutes with the kinetic and mass blocks"),
        check!("dynamics.mass-term.real", Dynamics, Vanish, IDENTITY, check_mass_term_real,
            "the lambda-rho mass term is real"),
        check!("spin-one.theta", SpinOne, Vanish, ALGEBRAIC, check_theta_one,
            "the spin-1 Wigner matrix is real symmetric orthogonal with Theta J Theta^-1 = -J*"),
        check!("spin-one.theta-squares", SpinOne, Vanish, ALGEBRAIC, check_theta_squares,
            "the spin-1 Wigner matrix squares to +1 while the spin-1/2 one squares to -1"),
        check!("c-squared-minus-one", SpinOne, Vanish, ALGEBRAIC, check_sc_squared,
            "the spin-1 conjugation operator squares to -1"),
        check!("spin-one.gamma5-sc-squared", SpinOne, Vanish, ALGEBRAIC, check_gamma5_sc_squared,
            "Gamma5 S^c squares to +1"),
        check!("spin-one.gamma5-sc-anticommute", SpinOne, Vanish, ALGEBRAIC, check_gamma5_sc_anticommute,
            "Gamma5 anticommutes with the matrix part of S^c"),
        check!("spin-one.gamma5-sc.zeta", SpinOne, Vanish, ZETA_SCAN, check_gamma5_sc_minima,
            "Gamma5 S^c conjugacy holds with zeta = +1 (self) and zeta = -1 (anti-self)"),
        check!("sc-no-solution", SpinOne, ExceedFloor, NONEXISTENCE_FLOOR, check_sc_no_solution,
            "no block phase zeta makes a spin-1 lambda or rho an eigenvector of S^c alone"),
        check!("spin-one.scan.phase-covariance", SpinOne, Vanish, ZETA_SCAN, check_scan_phase_covariance,
            "changing the phase of S^c rotates the optimal zeta by the same phase"),
        check!("spin-one.rho-lambda", SpinOne, Vanish, IDENTITY, check_rho_lambda_relation,
            "spin-1 rho equals a fixed sign times lambda of opposite helicity"),
    ]
}
