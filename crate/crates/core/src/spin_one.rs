//! The `(1,0) + (0,1)` sector: spin-1 generators, the Wigner matrix, the
//! conjugation operators and six-component λ/ρ objects.
//!
//! Three-component objects use the spherical basis with `J_z = diag(1, 0, -1)`.

use std::f64::consts::{PI, SQRT_2};

use serde::{Deserialize, Serialize};

use crate::kinematics::{boost_one, AngularParams, FourMomentum, Side};
use crate::matrix::{c, phase, CMatrix, CVector, C64, ONE, ZERO};
use crate::spinors::PhaseConfig;

/// Spin-1 generators `[J_x, J_y, J_z]` in the spherical basis.
pub fn generators() -> [CMatrix; 3] {
    let r = 1.0 / SQRT_2;
    let jx = CMatrix::from_real_rows([[0.0, r, 0.0], [r, 0.0, r], [0.0, r, 0.0]]);
    let ri = c(0.0, r);
    let jy = CMatrix::from_rows([[ZERO, -ri, ZERO], [ri, ZERO, -ri], [ZERO, ri, ZERO]]);
    let jz = CMatrix::diag_re(&[1.0, 0.0, -1.0]);
    [jx, jy, jz]
}

/// `J . n` for a real 3-vector.
pub fn j_dot(n: [f64; 3]) -> CMatrix {
    let [jx, jy, jz] = generators();
    &(&jx.scale_re(n[0]) + &jy.scale_re(n[1])) + &jz.scale_re(n[2])
}

/// Spin-1 Wigner matrix: antidiagonal `(1, -1, 1)`, satisfying `Theta J Theta^-1 = -J*`.
pub fn wigner_theta_one() -> CMatrix {
    CMatrix::from_real_rows([[0.0, 0.0, 1.0], [0.0, -1.0, 0.0], [1.0, 0.0, 0.0]])
}

/// Rotation `exp(-i J_z phi) exp(-i J_y theta)` taking the z axis to `n(theta, phi)`.
pub fn rotation(a: &AngularParams) -> CMatrix {
    let (s, co) = a.theta().sin_cos();
    let r = s / SQRT_2;
    let d = CMatrix::from_real_rows([
        [(1.0 + co) / 2.0, -r, (1.0 - co) / 2.0],
        [r, co, -r],
        [(1.0 - co) / 2.0, r, (1.0 + co) / 2.0],
    ]);
    let z = CMatrix::diag(&[phase(-a.phi()), ONE, phase(a.phi())]);
    &z * &d
}

/// Spin-1 helicity index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Helicity1 {
    Plus,
    Zero,
    Minus,
}

impl Helicity1 {
    pub const ALL: [Helicity1; 3] = [Helicity1::Plus, Helicity1::Zero, Helicity1::Minus];

    pub fn value(self) -> f64 {
        match self {
            Helicity1::Plus => 1.0,
            Helicity1::Zero => 0.0,
            Helicity1::Minus => -1.0,
        }
    }

    fn column(self) -> usize {
        match self {
            Helicity1::Plus => 0,
            Helicity1::Zero => 1,
            Helicity1::Minus => 2,
        }
    }
}

/// Helicity triplet member `(J.n) phi = h phi`, with phase `e^{i theta1}` for `h = +1`
/// and `e^{i theta2}` for `h = -1`.
pub fn helicity_triplet(a: &AngularParams, h: Helicity1, cfg: &PhaseConfig) -> CVector {
    let rot = rotation(a);
    let k = h.column();
    let col = CVector::from([rot[(0, k)], rot[(1, k)], rot[(2, k)]]);
    let ph = match h {
        Helicity1::Plus => phase(cfg.theta1),
        Helicity1::Zero => ONE,
        Helicity1::Minus => phase(cfg.theta2),
    };
    col.scale(ph)
}

/// An operator on six-component objects, possibly antilinear.
#[derive(Clone, Debug, PartialEq)]
pub struct SpinOneOperator {
    pub matrix: CMatrix,
    pub antilinear: bool,
    pub phase: C64,
}

impl SpinOneOperator {
    pub fn apply(&self, v: &CVector) -> CVector {
        let operand = if self.antilinear { v.conj() } else { v.clone() };
        self.matrix.apply(&operand).scale(self.phase)
    }

    /// `self` after `other`.
    pub fn compose(&self, other: &SpinOneOperator) -> SpinOneOperator {
        let (m2, p2) = if self.antilinear {
            (other.matrix.conj(), other.phase.conj())
        } else {
            (other.matrix.clone(), other.phase)
        };
        SpinOneOperator {
            matrix: &self.matrix * &m2,
            antilinear: self.antilinear ^ other.antilinear,
            phase: self.phase * p2,
        }
    }
}

/// Charge conjugation `e^{i vartheta} [[0, Theta], [-Theta, 0]] K`.
pub fn sc_one(vartheta: f64) -> SpinOneOperator {
    let t = wigner_theta_one();
    SpinOneOperator {
        matrix: CMatrix::from_blocks(&CMatrix::zeros(3, 3), &t, &-&t, &CMatrix::zeros(3, 3)),
        antilinear: true,
        phase: phase(vartheta),
    }
}

/// Space inversion matrix part `e^{i vartheta} [[0, 1], [1, 0]]`.
pub fn ss_one(vartheta: f64) -> SpinOneOperator {
    let one = CMatrix::identity(3);
    let zero = CMatrix::zeros(3, 3);
    SpinOneOperator {
        matrix: CMatrix::from_blocks(&zero, &one, &one, &zero),
        antilinear: false,
        phase: phase(vartheta),
    }
}

/// Chirality `diag(1_3, -1_3)`.
pub fn gamma5_one() -> CMatrix {
    CMatrix::diag_re(&[1.0, 1.0, 1.0, -1.0, -1.0, -1.0])
}

/// `Gamma5 S^c` as a single antilinear operator.
pub fn gamma5_sc_one(vartheta: f64) -> SpinOneOperator {
    let g5 = SpinOneOperator {
        matrix: gamma5_one(),
        antilinear: false,
        phase: ONE,
    };
    g5.compose(&sc_one(vartheta))
}

/// Six-component object: right-handed block on top, left-handed block below.
#[derive(Clone, Debug, PartialEq)]
pub struct SixSpinor {
    pub components: CVector,
    pub zeta: C64,
}

impl SixSpinor {
    pub fn right_block(&self) -> CVector {
        self.components.segment(0, 3)
    }

    pub fn left_block(&self) -> CVector {
        self.components.segment(3, 3)
    }
}

/// `lambda(p) = (B_R zeta Theta phi_L*, B_L phi_L)` with `phi_L` from the helicity triplet.
pub fn spin1_lambda(
    p: &FourMomentum,
    zeta: C64,
    a: &AngularParams,
    h: Helicity1,
    cfg: &PhaseConfig,
) -> SixSpinor {
    let phi_l = helicity_triplet(a, h, cfg);
    let right = wigner_theta_one().apply(&phi_l.conj()).scale(zeta);
    let components = boost_one(p, Side::Right)
        .apply(&right)
        .stack(&boost_one(p, Side::Left).apply(&phi_l));
    SixSpinor { components, zeta }
}

/// `rho(p) = (B_R phi_R, B_L zeta Theta phi_R*)`.
pub fn spin1_rho(
    p: &FourMomentum,
    zeta: C64,
    a: &AngularParams,
    h: Helicity1,
    cfg: &PhaseConfig,
) -> SixSpinor {
    let phi_r = helicity_triplet(a, h, cfg);
    let left = wigner_theta_one().apply(&phi_r.conj()).scale(zeta);
    let components = boost_one(p, Side::Right)
        .apply(&phi_r)
        .stack(&boost_one(p, Side::Left).apply(&left));
    SixSpinor { components, zeta }
}

/// Relative residuals `(||O v - v||, ||O v + v||) / ||v||`.
pub fn conjugacy_residuals(op: &SpinOneOperator, v: &CVector) -> (f64, f64) {
    let ov = op.apply(v);
    let n = v.norm();
    ((&ov - v).norm() / n, (&ov + v).norm() / n)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ConjugationChoice {
    /// `S^c` alone.
    Sc,
    /// `Gamma5 S^c`.
    Gamma5Sc,
}

/// Best phase found by the scan for one requirement.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScanMinimum {
    pub zeta: C64,
    pub residual: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScanReport {
    pub operator: ConjugationChoice,
    pub lambda_self: ScanMinimum,
    pub lambda_anti: ScanMinimum,
    pub rho_self: ScanMinimum,
    pub rho_anti: ScanMinimum,
}

pub const SCAN_SAMPLES: usize = 720;

/// Minimizes over `zeta = e^{i chi}` on the unit circle: coarse grid, then
/// golden-section refinement inside the best grid cell. Ties go to the smaller `chi`.
pub fn minimize_on_circle(f: impl Fn(C64) -> f64) -> ScanMinimum {
    let step = 2.0 * PI / SCAN_SAMPLES as f64;
    let g = |chi: f64| f(phase(chi));
    let (mut best_chi, mut best) = (0.0, g(0.0));
    for k in 1..SCAN_SAMPLES {
        let chi = k as f64 * step;
        let r = g(chi);
        if r < best {
            best = r;
            best_chi = chi;
        }
    }
    let invphi = (5.0_f64.sqrt() - 1.0) / 2.0;
    let (mut lo, mut hi) = (best_chi - step, best_chi + step);
    let mut x1 = hi - invphi * (hi - lo);
    let mut x2 = lo + invphi * (hi - lo);
    let (mut f1, mut f2) = (g(x1), g(x2));
    for _ in 0..80 {
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - invphi * (hi - lo);
            f1 = g(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + invphi * (hi - lo);
            f2 = g(x2);
        }
    }
    for (chi, r) in [(x1, f1), (x2, f2)] {
        if r < best {
            best = r;
            best_chi = chi;
        }
    }
    ScanMinimum {
        zeta: phase(best_chi.rem_euclid(2.0 * PI)),
        residual: best,
    }
}

/// For each of λ and ρ, the smallest self- and anti-self-conjugacy residual
/// reachable by choosing the block phase `zeta`.
pub fn spin1_conjugacy_scan(
    p: &FourMomentum,
    choice: ConjugationChoice,
    a: &AngularParams,
    h: Helicity1,
    cfg: &PhaseConfig,
    vartheta: f64,
) -> ScanReport {
    let op = match choice {
        ConjugationChoice::Sc => sc_one(vartheta),
        ConjugationChoice::Gamma5Sc => gamma5_sc_one(vartheta),
    };
    // both spinors are affine in zeta: v(z) = v(0) + z (v(1) - v(0))
    let affine = |build: &dyn Fn(C64) -> CVector| {
        let v0 = build(ZERO);
        let v1 = &build(ONE) - &v0;
        move |z: C64| &v0 + &v1.scale(z)
    };
    let lam = affine(&|z| spin1_lambda(p, z, a, h, cfg).components);
    let rho = affine(&|z| spin1_rho(p, z, a, h, cfg).components);
    ScanReport {
        operator: choice,
        lambda_self: minimize_on_circle(|z| conjugacy_residuals(&op, &lam(z)).0),
        lambda_anti: minimize_on_circle(|z| conjugacy_residuals(&op, &lam(z)).1),
        rho_self: minimize_on_circle(|z| conjugacy_residuals(&op, &rho(z)).0),
        rho_anti: minimize_on_circle(|z| conjugacy_residuals(&op, &rho(z)).1),
    }
}

/// Complex `k` minimizing `||rho - k lambda||`, with the residual; used to
/// record how the independently built ρ relates to λ.
pub fn rho_lambda_relation(rho: &SixSpinor, lambda: &SixSpinor) -> (C64, f64) {
    rho.components.projection_residual(&lambda.components)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::I;

    fn cfg() -> PhaseConfig {
        PhaseConfig::default()
    }

    #[test]
    fn theta_one_conjugates_generators() {
        let t = wigner_theta_one();
        let ti = t.inverse().unwrap();
        for j in generators() {
            let lhs = &(&t * &j) * &ti;
            assert!(lhs.distance(&-&j.conj()) < 1e-14);
        }
        let jz = &generators()[2];
        assert!((&(&t * jz) * &ti).distance(&-jz) < 1e-15);
    }

    #[test]
    fn theta_one_squares_to_identity_unlike_spin_half() {
        let t = wigner_theta_one();
        assert_eq!(&t * &t, CMatrix::identity(3));
        let half = CMatrix::from_real_rows([[0.0, -1.0], [1.0, 0.0]]);
        assert_eq!(&half * &half, CMatrix::identity(2).scale_re(-1.0));
        assert_eq!(t.transpose(), t);
        assert!(t.unitarity_defect() < 1e-15);
    }

    #[test]
    fn jn_cubed_is_jn() {
        let n = [0.48, -0.6, 0.64];
        let jn = j_dot(n);
        let cube = &(&jn * &jn) * &jn;
        assert!(cube.distance(&jn) < 1e-14);
    }

    #[test]
    fn rotation_matches_series_and_diagonalizes_jn() {
        let a = AngularParams::new(1.1, 4.0).unwrap();
        let [_, jy, jz] = generators();
        let ez = jz.scale(-I * a.phi()).exp_series(40).unwrap();
        let ey = jy.scale(-I * a.theta()).exp_series(40).unwrap();
        assert!(rotation(&a).distance(&(&ez * &ey)) < 1e-13);
        let jn = j_dot(a.unit_vector());
        for h in Helicity1::ALL {
            let v = helicity_triplet(&a, h, &cfg());
            let r = (&jn.apply(&v) - &v.scale_re(h.value())).norm();
            assert!(r < 1e-14, "{h:?}: {r}");
        }
    }

    #[test]
    fn sc_squares_to_minus_one() {
        let v = CVector::from([c(0.3, 1.0), c(-2.0, 0.1), c(0.0, 0.7), c(1.0, 1.0), c(0.2, -0.4), c(-0.9, 0.0)]);
        for th in [0.0, 0.7, PI / 2.0, 2.9] {
            let sc = sc_one(th);
            let twice = sc.apply(&sc.apply(&v));
            assert!((&twice + &v).norm() < 1e-14);
            let g = gamma5_sc_one(th);
            let twice = g.apply(&g.apply(&v));
            assert!((&twice - &v).norm() < 1e-14);
        }
        let ss = ss_one(0.0);
        assert!((&ss.apply(&ss.apply(&v)) - &v).norm() < 1e-15);
    }

    #[test]
    fn gamma5_anticommutes_with_sc_block() {
        let m = sc_one(0.0).matrix;
        assert!(gamma5_one().anticommutator(&m).max_abs() < 1e-15);
    }

    #[test]
    fn rest_frame_lambda_blocks() {
        let p = FourMomentum::at_rest(1.0).unwrap();
        let a = AngularParams::new(0.4, 1.0).unwrap();
        let lam = spin1_lambda(&p, ONE, &a, Helicity1::Plus, &cfg());
        let phi = helicity_triplet(&a, Helicity1::Plus, &cfg());
        assert_eq!(lam.left_block(), phi);
        assert!((&lam.right_block() - &wigner_theta_one().apply(&phi.conj())).norm() < 1e-15);
    }

    #[test]
    fn gamma5_sc_fixes_zeta_to_plus_minus_one() {
        let p = FourMomentum::new(0.4, -0.3, 1.2, 0.9).unwrap();
        let a = AngularParams::new(2.0, 0.3).unwrap();
        let op = gamma5_sc_one(0.0);
        for h in Helicity1::ALL {
            let s = spin1_lambda(&p, ONE, &a, h, &cfg());
            let an = spin1_lambda(&p, -ONE, &a, h, &cfg());
            assert!(conjugacy_residuals(&op, &s.components).0 < 1e-13);
            assert!(conjugacy_residuals(&op, &an.components).1 < 1e-13);
            let rs = spin1_rho(&p, ONE, &a, h, &cfg());
            let ra = spin1_rho(&p, -ONE, &a, h, &cfg());
            assert!(conjugacy_residuals(&op, &rs.components).0 < 1e-13);
            assert!(conjugacy_residuals(&op, &ra.components).1 < 1e-13);
        }
    }

    #[test]
    fn circle_minimizer_finds_known_minimum() {
        let target = phase(1.234567);
        let m = minimize_on_circle(|z| (z - target).norm());
        assert!(m.residual < 1e-12);
        assert!((m.zeta - target).norm() < 1e-12);
    }
}
