//! On-shell four-momenta, light-cone combinations, parity reflection and boosts.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{c, sigma_dot, CMatrix, C64};
use crate::spin_one;

/// On-shell four-momentum `(E, px, py, pz)` of a particle with mass `m > 0`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct FourMomentum {
    e: f64,
    px: f64,
    py: f64,
    pz: f64,
    m: f64,
}

impl FourMomentum {
    /// Builds the on-shell momentum; the energy is derived from `m` and `p`.
    pub fn new(px: f64, py: f64, pz: f64, m: f64) -> Result<Self> {
        if !(m > 0.0) || !m.is_finite() {
            return Err(Error::Domain(format!("mass must be positive, got {m}")));
        }
        if ![px, py, pz].iter().all(|x| x.is_finite()) {
            return Err(Error::Domain("momentum components must be finite".into()));
        }
        let e = (px * px + py * py + pz * pz + m * m).sqrt();
        Ok(Self { e, px, py, pz, m })
    }

    pub fn at_rest(m: f64) -> Result<Self> {
        Self::new(0.0, 0.0, 0.0, m)
    }

    pub fn energy(&self) -> f64 {
        self.e
    }

    pub fn mass(&self) -> f64 {
        self.m
    }

    pub fn px(&self) -> f64 {
        self.px
    }

    pub fn py(&self) -> f64 {
        self.py
    }

    pub fn pz(&self) -> f64 {
        self.pz
    }

    pub fn three_momentum(&self) -> [f64; 3] {
        [self.px, self.py, self.pz]
    }

    /// `|p|`.
    pub fn magnitude(&self) -> f64 {
        (self.px * self.px + self.py * self.py + self.pz * self.pz).sqrt()
    }

    /// `p_r = px + i py`.
    pub fn p_r(&self) -> C64 {
        c(self.px, self.py)
    }

    /// `p_l = px - i py`.
    pub fn p_l(&self) -> C64 {
        c(self.px, -self.py)
    }

    /// `p+ = E + pz`.
    pub fn p_plus(&self) -> f64 {
        self.e + self.pz
    }

    /// `p- = E - pz`.
    pub fn p_minus(&self) -> f64 {
        self.e - self.pz
    }

    /// Unit vector along `p`.
    pub fn direction(&self) -> Result<[f64; 3]> {
        let r = self.magnitude();
        if r == 0.0 {
            return Err(Error::DirectionUndefined);
        }
        Ok([self.px / r, self.py / r, self.pz / r])
    }

    /// Polar and azimuthal angles of `p`; `phi` is reduced to `[0, 2 pi)`.
    pub fn angles(&self) -> Result<AngularParams> {
        let r = self.magnitude();
        if r == 0.0 {
            return Err(Error::DirectionUndefined);
        }
        let theta = (self.pz / r).clamp(-1.0, 1.0).acos();
        let phi = self.py.atan2(self.px).rem_euclid(2.0 * PI);
        // rem_euclid can round up to exactly 2 pi
        let phi = if phi >= 2.0 * PI { 0.0 } else { phi };
        AngularParams::new(theta, phi)
    }

    /// Rapidity `arccosh(E / m)`.
    pub fn rapidity(&self) -> f64 {
        // asinh(|p|/m) is the well-conditioned form of acosh(E/m)
        (self.magnitude() / self.m).asinh()
    }

    /// Relative violation of `E^2 = |p|^2 + m^2`.
    pub fn on_shell_defect(&self) -> f64 {
        let p2 = self.px * self.px + self.py * self.py + self.pz * self.pz;
        (self.e * self.e - p2 - self.m * self.m).abs() / (self.e * self.e)
    }

    pub fn four_vector(&self) -> FourVector {
        FourVector::new(self.e, self.three_momentum())
    }
}

/// Space inversion `(E, p) -> (E, -p)`.
pub fn parity_reflect(p: &FourMomentum) -> FourMomentum {
    FourMomentum {
        px: -p.px,
        py: -p.py,
        pz: -p.pz,
        ..*p
    }
}

/// A four-vector not tied to a mass shell.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct FourVector {
    pub e: f64,
    pub p: [f64; 3],
}

impl FourVector {
    pub fn new(e: f64, p: [f64; 3]) -> Self {
        Self { e, p }
    }

    /// `k^2 = E^2 - |p|^2`.
    pub fn square(&self) -> f64 {
        self.e * self.e - self.p.iter().map(|x| x * x).sum::<f64>()
    }

    pub fn magnitude(&self) -> f64 {
        self.p.iter().map(|x| x * x).sum::<f64>().sqrt()
    }
}

/// Polar angle `theta` in `[0, pi]` and azimuth `phi`.
///
/// Constructed angles have `phi` in `[0, 2 pi)`. [`AngularParams::reflected`]
/// does not reduce `phi` modulo `2 pi`: helicity 2-spinors depend on `phi / 2`,
/// so `phi + pi` and `phi - pi` label spinors of opposite sign.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct AngularParams {
    theta: f64,
    phi: f64,
}

impl AngularParams {
    pub fn new(theta: f64, phi: f64) -> Result<Self> {
        if !(0.0..=PI).contains(&theta) {
            return Err(Error::Domain(format!("theta = {theta} outside [0, pi]")));
        }
        if !(0.0..2.0 * PI).contains(&phi) {
            return Err(Error::Domain(format!("phi = {phi} outside [0, 2 pi)")));
        }
        Ok(Self { theta, phi })
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    /// Image under space inversion: `theta -> pi - theta`, `phi -> pi + phi`.
    pub fn reflected(&self) -> Self {
        Self {
            theta: PI - self.theta,
            phi: PI + self.phi,
        }
    }

    pub fn unit_vector(&self) -> [f64; 3] {
        let (st, ct) = self.theta.sin_cos();
        let (sp, cp) = self.phi.sin_cos();
        [st * cp, st * sp, ct]
    }
}

/// Chirality of a boost block.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    Right,
    Left,
}

/// Spin-1/2 boost `(E + m +/- sigma.p) / sqrt(2m(E + m))`, `+` for the right-handed block.
pub fn boost_half(p: &FourMomentum, side: Side) -> CMatrix {
    let sign = match side {
        Side::Right => 1.0,
        Side::Left => -1.0,
    };
    let [x, y, z] = p.three_momentum();
    let sp = sigma_dot([sign * x, sign * y, sign * z]);
    let norm = (2.0 * p.m * (p.e + p.m)).sqrt();
    (&CMatrix::identity(2).scale_re(p.e + p.m) + &sp).scale_re(1.0 / norm)
}

/// Spin-1 boost `exp(+/- (J.n) phi)` with `cosh phi = E / m`, in the spherical basis.
///
/// Uses `(J.n)^3 = J.n`, so
/// `exp(x J.n) = 1 + (J.n) sinh x + (J.n)^2 (cosh x - 1)`. The identity is returned at rest.
pub fn boost_one(p: &FourMomentum, side: Side) -> CMatrix {
    let Ok(n) = p.direction() else {
        return CMatrix::identity(3);
    };
    let x = match side {
        Side::Right => p.rapidity(),
        Side::Left => -p.rapidity(),
    };
    let jn = spin_one::j_dot(n);
    let jn2 = &jn * &jn;
    let id = CMatrix::identity(3);
    // cosh x - 1 = E/m - 1 = |p|^2 / (m (E + m)), free of cancellation
    let cosh_m1 = p.magnitude().powi(2) / (p.m * (p.e + p.m));
    let sinh = x.signum() * p.magnitude() / p.m;
    &(&id + &jn.scale_re(sinh)) + &jn2.scale_re(cosh_m1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rest_frame_scalars() {
        let p = FourMomentum::new(0.0, 0.0, 0.0, 1.0).unwrap();
        assert_eq!(p.energy(), 1.0);
        assert_eq!(p.p_plus(), 1.0);
        assert_eq!(p.p_minus(), 1.0);
        assert_eq!(p.p_r(), c(0.0, 0.0));
        assert_eq!(p.p_l(), c(0.0, 0.0));
    }

    #[test]
    fn light_cone_scalars() {
        let p = FourMomentum::new(3.0, 4.0, 0.0, 0.5).unwrap();
        assert_eq!(p.energy(), 25.25_f64.sqrt());
        assert_eq!(p.p_r(), c(3.0, 4.0));
        assert_eq!(p.p_l(), c(3.0, -4.0));

        let q = FourMomentum::new(0.0, 0.0, -2.0, 1.0).unwrap();
        let e = 5.0_f64.sqrt();
        assert_eq!(q.energy(), e);
        assert_eq!(q.p_plus(), e - 2.0);
        assert_eq!(q.p_minus(), e + 2.0);
    }

    #[test]
    fn nonpositive_mass_rejected() {
        assert!(matches!(FourMomentum::new(1.0, 0.0, 0.0, 0.0), Err(Error::Domain(_))));
        assert!(matches!(FourMomentum::new(1.0, 0.0, 0.0, -2.0), Err(Error::Domain(_))));
    }

    #[test]
    fn parity_reflection() {
        let rest = FourMomentum::at_rest(1.3).unwrap();
        assert_eq!(parity_reflect(&rest), rest);
        let p = FourMomentum::new(1.0, 2.0, 3.0, 0.7).unwrap();
        let q = parity_reflect(&p);
        assert_eq!(q.three_momentum(), [-1.0, -2.0, -3.0]);
        assert_eq!(q.energy(), p.energy());
        assert_eq!(parity_reflect(&q), p);
    }

    #[test]
    fn chiral_boosts_are_mutual_inverses() {
        for p in [
            FourMomentum::new(0.6, -0.8, 1.2, 1.5).unwrap(),
            FourMomentum::new(-30.0, 4.0, 7.0, 0.2).unwrap(),
        ] {
            let r = boost_half(&p, Side::Right);
            let l = boost_half(&p, Side::Left);
            assert!((&r * &l.adjoint()).distance(&CMatrix::identity(2)) < 1e-13);
        }
    }

    #[test]
    fn reflected_angles() {
        let a = AngularParams::new(PI / 3.0, PI / 4.0).unwrap();
        let r = a.reflected();
        assert!((r.theta() - 2.0 * PI / 3.0).abs() < 1e-15);
        assert!((r.phi() - 5.0 * PI / 4.0).abs() < 1e-15);
        let (u, v) = (a.unit_vector(), r.unit_vector());
        for k in 0..3 {
            assert!((u[k] + v[k]).abs() < 1e-15);
        }
    }

    #[test]
    fn angle_domain() {
        assert!(AngularParams::new(-0.1, 0.0).is_err());
        assert!(AngularParams::new(0.1, 2.0 * PI).is_err());
        assert!(FourMomentum::at_rest(1.0).unwrap().angles().is_err());
    }

    #[test]
    fn half_boosts_at_rest_are_identity() {
        let p = FourMomentum::at_rest(2.0).unwrap();
        for side in [Side::Right, Side::Left] {
            assert!(boost_half(&p, side).distance(&CMatrix::identity(2)) < 1e-15);
            assert!(boost_one(&p, side).distance(&CMatrix::identity(3)) < 1e-15);
        }
    }

    #[test]
    fn z_boost_spin_one_eigenfactors() {
        // E/m = 2 => e^{+-phi} = 2 +- sqrt(3)
        let m = 1.5;
        let p = FourMomentum::new(0.0, 0.0, 3.0_f64.sqrt() * m, m).unwrap();
        assert!((p.energy() / m - 2.0).abs() < 1e-15);
        let b = boost_one(&p, Side::Right);
        let s3 = 3.0_f64.sqrt();
        let expect = CMatrix::diag_re(&[2.0 + s3, 1.0, 2.0 - s3]);
        assert!(b.distance(&expect) < 1e-14);
    }

    #[test]
    fn boost_half_determinant_and_inverse_adjoint() {
        let p = FourMomentum::new(0.3, -1.2, 2.5, 0.8).unwrap();
        let r = boost_half(&p, Side::Right);
        let l = boost_half(&p, Side::Left);
        assert!((r.det().unwrap() - c(1.0, 0.0)).norm() < 1e-14);
        assert!((l.det().unwrap() - c(1.0, 0.0)).norm() < 1e-14);
        assert!(l.distance(&r.adjoint().inverse().unwrap()) < 1e-13);
        // the naive unitarity relation does not hold for a boost
        assert!((&r * &l.adjoint()).distance(&CMatrix::identity(2)) < 1e-13);
        assert!((&r * &r.adjoint()).distance(&CMatrix::identity(2)) > 0.1);
    }
}
