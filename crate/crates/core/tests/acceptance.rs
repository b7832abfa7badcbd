//! Acceptance criteria 1-10 at their stated tolerances, seed 1, 100 momenta.
//! Prints one PASS/FAIL line per criterion and exits nonzero if any fail.

use std::f64::consts::PI;
use std::process::{Command, ExitCode};
use std::time::Instant;

use majorana::cli::fmt12;
use majorana::dynamics::{discover_convention, lagrangian_mass_term, FrequencyConvention, MassTermFields};
use majorana::gamma::{gamma0, gamma5};
use majorana::kinematics::{parity_reflect, AngularParams, FourMomentum};
use majorana::matrix::{c, phase, CMatrix, CVector, C64, I};
use majorana::sampling::Sampler;
use majorana::spin_one::{gamma5_sc_one, sc_one, spin1_conjugacy_scan, ConjugationChoice, Helicity1};
use majorana::spinors::{
    elko_helicity, helicity_two_spinor, lambda_spinor, rho_spinor, wigner_theta_half, Basis, Family, Helicity,
    Index, Kind, PhaseConfig,
};
use majorana::suite::{run_suite, SuiteName};
use majorana::symmetry::{
    alpha_along, charge_conjugation, chiral_gauge_transform, chiral_helicity_operator, classify_cp_action,
    eigen_residual, helicity_operator, lambda_basis_transforms, su2_from_angle, u1, u2, u3, xi_transform_target,
    CpFamily, Relation,
};

const SEED: u64 = 1;
const SAMPLES: usize = 100;

struct Verdict {
    pass: bool,
    detail: String,
}

type Criterion = (&'static str, fn() -> Verdict);

fn verdict(pass: bool, detail: String) -> Verdict {
    Verdict { pass, detail }
}

fn momenta(label: &str) -> Vec<FourMomentum> {
    Sampler::for_stream(SEED, label).momenta(SAMPLES)
}

fn rel(a: &CVector, b: &CVector) -> f64 {
    (a - b).norm() / b.norm()
}

const KINDS: [Kind; 2] = [Kind::S, Kind::A];
const ELKO: [Family; 2] = [Family::Lambda, Family::Rho];

fn conjugacy() -> Verdict {
    let cop = charge_conjugation(&PhaseConfig::default());
    let mut worst = 0.0_f64;
    for p in momenta("acceptance.conjugacy") {
        let a = p.angles().unwrap();
        for kind in KINDS {
            for index in Index::BOTH {
                let mut vs = vec![
                    lambda_spinor(&p, kind, index).unwrap().components,
                    rho_spinor(&p, kind, index).unwrap().components,
                ];
                for family in ELKO {
                    vs.push(elko_helicity(&p, &a, family, kind, index, &PhaseConfig::default()).unwrap().components);
                }
                for v in vs {
                    worst = worst.max(rel(&cop.apply(&v), &v.scale_re(kind.c_sign())));
                }
            }
        }
    }
    verdict(worst <= 1e-12, format!("max residual {worst:.2e} (tolerance 1e-12)"))
}

/// Rest spinors over sqrt(m/2): lambda as displayed, rho composed from lambda.
fn expected_rest_rows() -> Vec<(String, [C64; 4])> {
    let (o, z) = (c(1.0, 0.0), c(0.0, 0.0));
    let ls_up = [z, I, o, z];
    let ls_down = [-I, z, z, o];
    let la_up = [z, -I, o, z];
    let la_down = [I, z, z, o];
    let times = |k: C64, v: [C64; 4]| v.map(|x| k * x);
    vec![
        ("lambda S up".into(), ls_up),
        ("lambda S down".into(), ls_down),
        ("lambda A up".into(), la_up),
        ("lambda A down".into(), la_down),
        // rho^S_{up,down} = -+ i lambda^A_{down,up}, rho^A_{up,down} = +- i lambda^S_{down,up}
        ("rho S up".into(), times(-I, la_down)),
        ("rho S down".into(), times(I, la_up)),
        ("rho A up".into(), times(I, ls_down)),
        ("rho A down".into(), times(-I, ls_up)),
    ]
}

fn symbol(z: C64) -> &'static str {
    match (z.re as i64, z.im as i64) {
        (0, 0) => "0",
        (1, 0) => "1",
        (-1, 0) => "-1",
        (0, 1) => "i",
        (0, -1) => "-i",
        _ => "?",
    }
}

fn rest_table() -> Verdict {
    let mut bad = Vec::new();
    for m in [0.5_f64, 1.0, 2.0] {
        let out = Command::new(env!("CARGO_BIN_EXE_majorana"))
            .args(["table", "--mass", &m.to_string()])
            .output()
            .expect("binary runs");
        let text = String::from_utf8_lossy(&out.stdout).into_owned();
        let mut want = vec![format!("sqrt(m/2) = {}", fmt12((m / 2.0).sqrt()))];
        for (label, row) in expected_rest_rows() {
            let entries: Vec<&str> = row.iter().map(|&z| symbol(z)).collect();
            want.push(format!("{label:<16}({})", entries.join(", ")));
        }
        let got: Vec<&str> = text.lines().collect();
        if !out.status.success() || got != want {
            bad.push(m);
        }
    }
    verdict(bad.is_empty(), if bad.is_empty() { "m = 0.5, 1, 2 match".into() } else { format!("mismatch at m = {bad:?}") })
}

fn dynamics() -> Verdict {
    let d = discover_convention(&momenta("acceptance.dynamics")).unwrap();
    let winner = match d.convention {
        Some(FrequencyConvention::Plus) => d.plus_max,
        Some(FrequencyConvention::Minus) => d.minus_max,
        None => f64::INFINITY,
    };
    let pass = d.convention.is_some() && winner <= 1e-12 && d.losing_min > 0.5;
    verdict(
        pass,
        format!(
            "convention {:?}: max residual {winner:.2e}/m, opposite min {:.3}/m (needs > 0.5)",
            d.convention, d.losing_min
        ),
    )
}

fn unitary_chain() -> Verdict {
    let mut worst = (u2().det().unwrap() + c(1.0, 0.0)).norm().max((u3().det().unwrap() + c(1.0, 0.0)).norm());
    let half_g5 = gamma5().scale_re(0.5);
    for p in momenta("acceptance.unitary-chain") {
        let u = u1(&p).unwrap();
        let ui = u.inverse().unwrap();
        worst = worst.max((u.det().unwrap() - c(1.0, 0.0)).norm());
        let h = &(&u * &helicity_operator(&p).unwrap().matrix) * &ui;
        worst = worst.max((&(&u3() * &h) * &u3().inverse().unwrap()).distance(&half_g5));
        let a = &(&u * &alpha_along(&p).unwrap()) * &ui;
        worst = worst.max((&(&u2() * &a) * &u2().inverse().unwrap()).distance(&gamma5()));
    }
    verdict(worst <= 1e-12, format!("max residual {worst:.2e} (tolerance 1e-12)"))
}

fn generic(p: &FourMomentum) -> bool {
    let m = p.magnitude();
    p.three_momentum().iter().all(|x| x.abs() > 1e-3 * m)
}

fn separation() -> Verdict {
    let cfg = PhaseConfig::default();
    let (mut min_h, mut max_eta) = (f64::INFINITY, 0.0_f64);
    for p in momenta("acceptance.separation").into_iter().filter(generic) {
        let h = helicity_operator(&p).unwrap().matrix;
        let eta = chiral_helicity_operator(&p).unwrap().matrix;
        let a = p.angles().unwrap();
        for kind in KINDS {
            for index in Index::BOTH {
                let spinorial = lambda_spinor(&p, kind, index).unwrap().components;
                let helicity = elko_helicity(&p, &a, Family::Lambda, kind, index, &cfg).unwrap().components;
                min_h = min_h.min(eigen_residual(&h, &spinorial).1).min(eigen_residual(&h, &helicity).1);
                let (q, r) = eigen_residual(&eta, &helicity);
                let label = if index == Index::Up { 0.5 } else { -0.5 };
                max_eta = max_eta.max(r).max((q - c(label, 0.0)).norm());
            }
        }
    }
    verdict(
        min_h > 0.1 && max_eta <= 1e-12,
        format!("helicity residual min {min_h:.3} (> 0.1), chiral-helicity residual max {max_eta:.2e} (<= 1e-12)"),
    )
}

fn parity() -> Verdict {
    let g0 = gamma0();
    let table = [
        (Kind::S, Index::Up, I),
        (Kind::S, Index::Down, -I),
        (Kind::A, Index::Up, -I),
        (Kind::A, Index::Down, I),
    ];
    let mut worst = 0.0_f64;
    for p in momenta("acceptance.parity") {
        let pr = parity_reflect(&p);
        for (kind, index, k) in table {
            let lhs = g0.apply(&lambda_spinor(&pr, kind, index).unwrap().components);
            let rhs = lambda_spinor(&p, kind, index.flipped()).unwrap().components.scale(k);
            worst = worst.max(rel(&lhs, &rhs));
        }
    }
    let theta = wigner_theta_half();
    let mut s = Sampler::for_stream(SEED, "acceptance.parity.angles");
    for _ in 0..SAMPLES {
        let a = AngularParams::new(s.uniform(-1.0, 1.0).acos(), s.uniform(0.0, 2.0 * PI)).unwrap();
        let cfg = PhaseConfig {
            theta1: s.uniform(0.0, 2.0 * PI),
            theta2: s.uniform(0.0, 2.0 * PI),
            ..Default::default()
        };
        let (t1, t2) = (cfg.theta1, cfg.theta2);
        let r = a.reflected();
        let plus = helicity_two_spinor(&a, Helicity::Plus, &cfg).components;
        let minus = helicity_two_spinor(&a, Helicity::Minus, &cfg).components;
        let r_plus = helicity_two_spinor(&r, Helicity::Plus, &cfg).components;
        let r_minus = helicity_two_spinor(&r, Helicity::Minus, &cfg).components;
        worst = worst
            .max(rel(&r_minus, &plus.scale(-I * phase(t2 - t1))))
            .max(rel(&r_plus, &minus.scale(-I * phase(t1 - t2))))
            .max(rel(&theta.apply(&r_minus.conj()), &minus.scale(-I * phase(-2.0 * t2))))
            .max(rel(&theta.apply(&r_plus.conj()), &plus.scale(I * phase(-2.0 * t1))));
    }
    verdict(worst <= 1e-12, format!("max residual {worst:.2e} (tolerance 1e-12)"))
}

fn cp_dichotomy() -> Verdict {
    let ps = momenta("acceptance.cp");
    let cfg = PhaseConfig::default();
    let mut parts = Vec::new();
    let mut pass = true;
    for basis in [Basis::Spinorial, Basis::Helicity] {
        let r = classify_cp_action(basis, CpFamily::Dirac, &ps, &cfg).unwrap();
        let ok = r.relation == Relation::Anticommute && r.anticommute_residual <= 1e-12 && r.commute_residual > 0.1;
        pass &= ok;
        parts.push(format!("Dirac/{basis:?} {:?} ({:.2e} vs {:.2})", r.relation, r.anticommute_residual, r.commute_residual));
    }
    let r = classify_cp_action(Basis::Helicity, CpFamily::Elko, &ps, &cfg).unwrap();
    let ok = r.relation == Relation::Commute && r.commute_residual <= 1e-12 && r.anticommute_residual > 0.1;
    pass &= ok;
    parts.push(format!(
        "ELKO/Helicity {:?} (commute {:.2}, anticommute {:.2e}; expected commute)",
        r.relation, r.commute_residual, r.anticommute_residual
    ));
    verdict(pass, parts.join("; "))
}

fn mass_scale(f: &MassTermFields, m: f64) -> f64 {
    m * [&f.lambda_s, &f.rho_a, &f.lambda_a, &f.rho_s].iter().map(|v| v.norm().powi(2)).sum::<f64>()
}

fn invariances() -> Verdict {
    let cfg = PhaseConfig::default();
    let cop = charge_conjugation(&cfg);
    let mut s = Sampler::for_stream(SEED, "acceptance.invariances");
    let (mut mass, mut conj, mut xi) = (0.0_f64, 0.0_f64, 0.0_f64);
    for p in momenta("acceptance.invariances.momenta") {
        let w = [0; 4].map(|_| [s.uniform(-1.0, 1.0), s.uniform(-1.0, 1.0)]);
        let f = MassTermFields::superposed(&p, w).unwrap();
        let base = lagrangian_mass_term(&f, p.mass());
        let scale = mass_scale(&f, p.mass());
        for _ in 0..20 {
            let alpha = s.uniform(-PI, PI);
            let gl = chiral_gauge_transform(alpha, Family::Lambda).unwrap();
            let gr = chiral_gauge_transform(alpha, Family::Rho).unwrap();
            mass = mass.max((lagrangian_mass_term(&f.transformed(&gl, &gr), p.mass()) - base).norm() / scale);
            for kind in KINDS {
                for index in Index::BOTH {
                    for (g, v) in [(&gl, lambda_spinor(&p, kind, index)), (&gr, rho_spinor(&p, kind, index))] {
                        let gv = g.apply(&v.unwrap().components);
                        conj = conj.max(rel(&cop.apply(&gv), &gv.scale_re(kind.c_sign())));
                    }
                }
            }
        }
        let a = p.angles().unwrap();
        for (t, m) in lambda_basis_transforms(&p).unwrap() {
            for kind in KINDS {
                let other = if kind == Kind::S { Kind::A } else { Kind::S };
                for index in Index::BOTH {
                    let own = elko_helicity(&p, &a, Family::Lambda, kind, index, &cfg).unwrap().components;
                    let partner = elko_helicity(&p, &a, Family::Lambda, other, index, &cfg).unwrap().components;
                    let img = m.apply(&own);
                    xi = xi.max(rel(&img, &xi_transform_target(t, &own, &partner)));
                    conj = conj.max(rel(&cop.apply(&img), &img.scale_re(kind.c_sign())));
                }
            }
        }
    }
    let mut su2 = 0.0_f64;
    for _ in 0..SAMPLES {
        let mut draw = || su2_from_angle(s.uniform(-PI, PI), s.unit_vector()).unwrap();
        let (x, y) = (draw(), draw());
        let xy: CMatrix = &x * &y;
        su2 = su2.max(xy.unitarity_defect()).max((xy.det().unwrap() - c(1.0, 0.0)).norm());
    }
    let pass = mass <= 1e-12 && conj <= 1e-12 && xi <= 1e-12 && su2 <= 1e-13;
    verdict(
        pass,
        format!("mass term {mass:.2e}, conjugacy {conj:.2e}, Xi images {xi:.2e} (<= 1e-12); SU(2) closure {su2:.2e} (<= 1e-13)"),
    )
}

fn spin_one() -> Verdict {
    let mut s = Sampler::for_stream(SEED, "acceptance.spin-one");
    let mut squares = 0.0_f64;
    for _ in 0..SAMPLES {
        let v = CVector::new((0..6).map(|_| c(s.uniform(-1.0, 1.0), s.uniform(-1.0, 1.0))).collect()).unwrap();
        let (a, b) = (sc_one(0.0), gamma5_sc_one(0.0));
        squares = squares
            .max(rel(&a.apply(&a.apply(&v)), &v.scale_re(-1.0)))
            .max(rel(&b.apply(&b.apply(&v)), &v));
    }
    let cfg = PhaseConfig::default();
    let mut points = vec![FourMomentum::at_rest(1.0).unwrap()];
    points.extend(s.momenta(20));
    let (mut g5_worst, mut sc_least) = (0.0_f64, f64::INFINITY);
    for p in &points {
        let a = p.angles().unwrap_or_else(|_| AngularParams::new(0.7, 2.0).unwrap());
        for h in Helicity1::ALL {
            let g = spin1_conjugacy_scan(p, ConjugationChoice::Gamma5Sc, &a, h, &cfg, 0.0);
            for (m, target) in [(g.lambda_self, 1.0), (g.lambda_anti, -1.0), (g.rho_self, 1.0), (g.rho_anti, -1.0)] {
                g5_worst = g5_worst.max(m.residual).max((m.zeta - c(target, 0.0)).norm());
            }
            let r = spin1_conjugacy_scan(p, ConjugationChoice::Sc, &a, h, &cfg, 0.0);
            for m in [r.lambda_self, r.lambda_anti, r.rho_self, r.rho_anti] {
                sc_least = sc_least.min(m.residual);
            }
        }
    }
    let pass = squares <= 1e-13 && g5_worst <= 1e-10 && sc_least > 0.1;
    verdict(
        pass,
        format!(
            "squares {squares:.2e} (<= 1e-13), Gamma5 S^c minima at zeta = +-1 {g5_worst:.2e} (<= 1e-10), S^c alone min {sc_least:.3} (> 0.1)"
        ),
    )
}

fn determinism() -> Verdict {
    let mut times = Vec::new();
    let mut identical = true;
    for suite in [SuiteName::SpinHalf, SuiteName::Symmetry, SuiteName::Dynamics, SuiteName::SpinOne] {
        let t = Instant::now();
        let a = run_suite(suite, SEED, SAMPLES).unwrap().to_json().unwrap();
        times.push(format!("{suite} {:.1}s", t.elapsed().as_secs_f64()));
        let b = run_suite(suite, SEED, SAMPLES).unwrap().to_json().unwrap();
        identical &= a == b;
    }
    verdict(identical, format!("byte-identical reports: {identical}; single-run times {}", times.join(", ")))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("conjugacy", conjugacy),
        ("rest-frame table", rest_table),
        ("coupled dynamics", dynamics),
        ("unitary chain", unitary_chain),
        ("non-eigenstate separation", separation),
        ("parity phases", parity),
        ("CP dichotomy", cp_dichotomy),
        ("invariances", invariances),
        ("spin 1", spin_one),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (n, (name, f)) in criteria.iter().enumerate() {
        let v = f();
        if !v.pass {
            failed += 1;
        }
        println!("criterion {:>2} {:<27} {}  {}", n + 1, name, if v.pass { "PASS" } else { "FAIL" }, v.detail);
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
