//! Spin-1/2 objects: rest-frame and boosted λ/ρ bispinors, Dirac `u`/`v`
//! spinors, helicity 2-spinors and the Dirac bar product.
//!
//! Bispinors are written in the chiral basis of [`crate::gamma`]: components
//! `0..2` are the right-handed block, `2..4` the left-handed block.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gamma;
use crate::kinematics::{boost_half, AngularParams, FourMomentum, Side};
use crate::matrix::{c, phase, CMatrix, CVector, C64, I, ONE, ZERO};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    Lambda,
    Rho,
    U,
    V,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Kind {
    /// Self charge-conjugate.
    S,
    /// Anti-self charge-conjugate.
    A,
    Particle,
    Antiparticle,
}

/// `Up`/`Down` index. For λ/ρ it is the chiral-helicity label; for `u`/`v` the
/// spin projection (spinorial basis) or the helicity (helicity basis).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Index {
    Up,
    Down,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Basis {
    /// Rest 2-spinors are `J_z` eigenstates along the fixed z axis.
    Spinorial,
    /// Rest 2-spinors are `sigma . n` eigenstates along the momentum.
    Helicity,
}

impl Index {
    pub const BOTH: [Index; 2] = [Index::Up, Index::Down];

    pub fn flipped(self) -> Index {
        match self {
            Index::Up => Index::Down,
            Index::Down => Index::Up,
        }
    }

    pub fn helicity(self) -> Helicity {
        match self {
            Index::Up => Helicity::Plus,
            Index::Down => Helicity::Minus,
        }
    }
}

impl Kind {
    /// Eigenvalue of charge conjugation for the self/anti-self kinds.
    pub fn c_sign(self) -> f64 {
        match self {
            Kind::S => 1.0,
            Kind::A => -1.0,
            Kind::Particle | Kind::Antiparticle => f64::NAN,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Lambda => "lambda",
            Family::Rho => "rho",
            Family::U => "u",
            Family::V => "v",
        })
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::S => "S",
            Kind::A => "A",
            Kind::Particle => "particle",
            Kind::Antiparticle => "antiparticle",
        })
    }
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Index::Up => "up",
            Index::Down => "down",
        })
    }
}

/// Eigenvalue sign of `sigma . n` for a helicity 2-spinor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Helicity {
    Plus,
    Minus,
}

impl Helicity {
    pub fn sign(self) -> f64 {
        match self {
            Helicity::Plus => 1.0,
            Helicity::Minus => -1.0,
        }
    }
}

/// Free phases of the construction.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct PhaseConfig {
    /// Phase of charge conjugation, `C = -e^{i theta_c} gamma^2 K`.
    pub theta_c: f64,
    /// Phase of the positive-helicity 2-spinor.
    pub theta1: f64,
    /// Phase of the negative-helicity 2-spinor.
    pub theta2: f64,
    /// 2-spinor phases used by the unitary up/down connection.
    pub alpha: f64,
    pub beta: f64,
}

/// Unit 2-spinor of definite helicity.
#[derive(Clone, Debug, PartialEq)]
pub struct TwoSpinor {
    pub components: CVector,
    pub helicity: Helicity,
    pub theta1: f64,
    pub theta2: f64,
}

/// Four-component spinor with its construction tags.
#[derive(Clone, Debug, PartialEq)]
pub struct Bispinor {
    pub components: CVector,
    pub momentum: FourMomentum,
    pub family: Family,
    pub kind: Kind,
    pub index: Index,
    pub basis: Basis,
}

impl Bispinor {
    pub fn new(
        components: CVector,
        momentum: FourMomentum,
        family: Family,
        kind: Kind,
        index: Index,
        basis: Basis,
    ) -> Result<Self> {
        let allowed = matches!(
            (family, kind),
            (Family::Lambda | Family::Rho, Kind::S | Kind::A)
                | (Family::U, Kind::Particle)
                | (Family::V, Kind::Antiparticle)
        );
        if !allowed {
            return Err(Error::Domain(format!(
                "no {family} spinor of kind {kind}"
            )));
        }
        if components.dim() != 4 || !components.is_finite() {
            return Err(Error::Domain("bispinor needs 4 finite components".into()));
        }
        Ok(Self {
            components,
            momentum,
            family,
            kind,
            index,
            basis,
        })
    }

    pub fn right_block(&self) -> CVector {
        self.components.segment(0, 2)
    }

    pub fn left_block(&self) -> CVector {
        self.components.segment(2, 2)
    }

    pub fn norm(&self) -> f64 {
        self.components.norm()
    }
}

fn require_mass(m: f64) -> Result<()> {
    if m > 0.0 && m.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("mass must be positive, got {m}")))
    }
}

fn require_elko_kind(kind: Kind) -> Result<()> {
    match kind {
        Kind::S | Kind::A => Ok(()),
        _ => Err(Error::Domain(format!("λ/ρ spinors have kind S or A, got {kind}"))),
    }
}

/// Rest-frame λ spinors with prefactor `sqrt(m/2)`.
pub fn rest_lambda(kind: Kind, index: Index, m: f64) -> Result<Bispinor> {
    require_mass(m)?;
    require_elko_kind(kind)?;
    let comps = match (kind, index) {
        (Kind::S, Index::Up) => [ZERO, I, ONE, ZERO],
        (Kind::S, Index::Down) => [-I, ZERO, ZERO, ONE],
        (Kind::A, Index::Up) => [ZERO, -I, ONE, ZERO],
        (Kind::A, Index::Down) => [I, ZERO, ZERO, ONE],
        _ => unreachable!(),
    };
    Bispinor::new(
        CVector::from(comps).scale_re((m / 2.0).sqrt()),
        FourMomentum::at_rest(m)?,
        Family::Lambda,
        kind,
        index,
        Basis::Spinorial,
    )
}

/// Rest-frame ρ spinors, obtained from λ with the opposite kind and index:
/// `rho^S_{up,down} = -/+ i lambda^A_{down,up}`, `rho^A_{up,down} = +/- i lambda^S_{down,up}`.
pub fn rest_rho(kind: Kind, index: Index, m: f64) -> Result<Bispinor> {
    require_elko_kind(kind)?;
    let (partner, factor) = match (kind, index) {
        (Kind::S, Index::Up) => (Kind::A, -I),
        (Kind::S, Index::Down) => (Kind::A, I),
        (Kind::A, Index::Up) => (Kind::S, I),
        (Kind::A, Index::Down) => (Kind::S, -I),
        _ => unreachable!(),
    };
    let lam = rest_lambda(partner, index.flipped(), m)?;
    Bispinor::new(
        lam.components.scale(factor),
        lam.momentum,
        Family::Rho,
        kind,
        index,
        Basis::Spinorial,
    )
}

/// Closed-form boosted λ spinor in the spinorial basis.
pub fn lambda_spinor(p: &FourMomentum, kind: Kind, index: Index) -> Result<Bispinor> {
    require_elko_kind(kind)?;
    let m = p.mass();
    let (pr, pl) = (p.p_r(), p.p_l());
    let a = c(p.p_minus() + m, 0.0);
    let b = c(p.p_plus() + m, 0.0);
    let comps = match (kind, index) {
        (Kind::S, Index::Up) => [I * pl, I * a, a, -pr],
        (Kind::S, Index::Down) => [-I * b, -I * pr, -pl, b],
        (Kind::A, Index::Up) => [-I * pl, -I * a, a, -pr],
        (Kind::A, Index::Down) => [I * b, I * pr, -pl, b],
        _ => unreachable!(),
    };
    let norm = 1.0 / (2.0 * (p.energy() + m).sqrt());
    Bispinor::new(
        CVector::from(comps).scale_re(norm),
        *p,
        Family::Lambda,
        kind,
        index,
        Basis::Spinorial,
    )
}

/// Closed-form boosted ρ spinor in the spinorial basis.
pub fn rho_spinor(p: &FourMomentum, kind: Kind, index: Index) -> Result<Bispinor> {
    require_elko_kind(kind)?;
    let m = p.mass();
    let (pr, pl) = (p.p_r(), p.p_l());
    let a = c(p.p_minus() + m, 0.0);
    let b = c(p.p_plus() + m, 0.0);
    let comps = match (kind, index) {
        (Kind::S, Index::Up) => [b, pr, I * pl, -I * b],
        (Kind::S, Index::Down) => [pl, a, I * a, -I * pr],
        (Kind::A, Index::Up) => [b, pr, -I * pl, I * b],
        (Kind::A, Index::Down) => [pl, a, -I * a, I * pr],
        _ => unreachable!(),
    };
    let norm = 1.0 / (2.0 * (p.energy() + m).sqrt());
    Bispinor::new(
        CVector::from(comps).scale_re(norm),
        *p,
        Family::Rho,
        kind,
        index,
        Basis::Spinorial,
    )
}

/// `block-diag(Lambda_R(p), Lambda_L(p))`.
pub fn boost_bispinor(p: &FourMomentum) -> CMatrix {
    CMatrix::block_diag(&boost_half(p, Side::Right), &boost_half(p, Side::Left))
}

/// Rest-frame λ/ρ spinor carried to `p` by the chiral boosts.
pub fn boosted_rest(p: &FourMomentum, family: Family, kind: Kind, index: Index) -> Result<Bispinor> {
    let rest = match family {
        Family::Lambda => rest_lambda(kind, index, p.mass())?,
        Family::Rho => rest_rho(kind, index, p.mass())?,
        _ => return Err(Error::Domain(format!("{family} is not a λ/ρ family"))),
    };
    Bispinor::new(
        boost_bispinor(p).apply(&rest.components),
        *p,
        family,
        kind,
        index,
        Basis::Spinorial,
    )
}

/// Helicity 2-spinor `(sigma . n) phi = h phi`:
/// `phi+ = e^{i theta1} (cos(t/2) e^{-i f/2}, sin(t/2) e^{i f/2})`,
/// `phi- = e^{i theta2} (sin(t/2) e^{-i f/2}, -cos(t/2) e^{i f/2})`.
pub fn helicity_two_spinor(a: &AngularParams, h: Helicity, cfg: &PhaseConfig) -> TwoSpinor {
    let (s, co) = (a.theta() / 2.0).sin_cos();
    let em = phase(-a.phi() / 2.0);
    let ep = phase(a.phi() / 2.0);
    let components = match h {
        Helicity::Plus => CVector::from([em * co, ep * s]).scale(phase(cfg.theta1)),
        Helicity::Minus => CVector::from([em * s, -ep * co]).scale(phase(cfg.theta2)),
    };
    TwoSpinor {
        components,
        helicity: h,
        theta1: cfg.theta1,
        theta2: cfg.theta2,
    }
}

/// Unitary map from the up to the down helicity 2-spinor,
/// `e^{i(beta - alpha)} [[0, e^{-i phi}], [-e^{i phi}, 0]]`.
pub fn helicity_connection(phi: f64, alpha: f64, beta: f64) -> CMatrix {
    CMatrix::from_rows([[ZERO, phase(-phi)], [-phase(phi), ZERO]]).scale(phase(beta - alpha))
}

/// Spin-1/2 Wigner matrix `-i sigma_2`.
pub fn wigner_theta_half() -> CMatrix {
    CMatrix::from_real_rows([[0.0, -1.0], [1.0, 0.0]])
}

/// Block phase `zeta` relating the two chiral blocks of a self/anti-self
/// conjugate bispinor, for the given conjugation phase.
fn zeta(family: Family, kind: Kind, theta_c: f64) -> C64 {
    let base = match (family, kind) {
        (Family::Lambda, Kind::S) | (Family::Rho, Kind::A) => I,
        _ => -I,
    };
    base * phase(theta_c)
}

/// λ/ρ spinor built from helicity 2-spinors at the angles `a`:
/// `lambda = sqrt(m/2) (Lambda_R zeta Theta phi_L*, Lambda_L phi_L)`,
/// `rho = sqrt(m/2) (Lambda_R phi_R, Lambda_L zeta Theta phi_R*)`.
///
/// `a` is passed separately from `p` so that parity images can be evaluated
/// on the reflected angles rather than on re-derived ones.
pub fn elko_helicity(
    p: &FourMomentum,
    a: &AngularParams,
    family: Family,
    kind: Kind,
    index: Index,
    cfg: &PhaseConfig,
) -> Result<Bispinor> {
    require_elko_kind(kind)?;
    let phi = helicity_two_spinor(a, index.helicity(), cfg).components;
    let partner = wigner_theta_half()
        .apply(&phi.conj())
        .scale(zeta(family, kind, cfg.theta_c));
    let (right, left) = match family {
        Family::Lambda => (partner, phi),
        Family::Rho => (phi, partner),
        _ => return Err(Error::Domain(format!("{family} is not a λ/ρ family"))),
    };
    let comps = boost_half(p, Side::Right)
        .apply(&right)
        .stack(&boost_half(p, Side::Left).apply(&left))
        .scale_re((p.mass() / 2.0).sqrt());
    Bispinor::new(comps, *p, family, kind, index, Basis::Helicity)
}

/// Dirac spinors normalized to `u-bar u = 2m`, `v-bar v = -2m`.
///
/// `u = sqrt(m) (Lambda_R chi, Lambda_L chi)`, `v = sqrt(m) (Lambda_R chi, -Lambda_L chi)`,
/// with `chi` the `J_z` eigenstate (spinorial) or the helicity 2-spinor along `p`
/// (helicity basis). The helicity basis needs `|p| > 0`.
pub fn dirac_spinor(p: &FourMomentum, family: Family, index: Index, basis: Basis) -> Result<Bispinor> {
    let chi = match basis {
        Basis::Spinorial => match index {
            Index::Up => CVector::from([ONE, ZERO]),
            Index::Down => CVector::from([ZERO, ONE]),
        },
        Basis::Helicity => {
            helicity_two_spinor(&p.angles()?, index.helicity(), &PhaseConfig::default()).components
        }
    };
    dirac_spinor_from(p, family, index, basis, &chi)
}

/// Dirac spinor from an explicit rest 2-spinor `chi`.
pub fn dirac_spinor_from(
    p: &FourMomentum,
    family: Family,
    index: Index,
    basis: Basis,
    chi: &CVector,
) -> Result<Bispinor> {
    let (kind, sign) = match family {
        Family::U => (Kind::Particle, 1.0),
        Family::V => (Kind::Antiparticle, -1.0),
        _ => return Err(Error::Domain(format!("{family} is not a Dirac family"))),
    };
    let right = boost_half(p, Side::Right).apply(chi);
    let left = boost_half(p, Side::Left).apply(chi).scale_re(sign);
    Bispinor::new(
        right.stack(&left).scale_re(p.mass().sqrt()),
        *p,
        family,
        kind,
        index,
        basis,
    )
}

/// Dirac bar product `a-bar b = a^dagger gamma0 b`.
pub fn bar_product(a: &Bispinor, b: &Bispinor) -> C64 {
    bar(&a.components, &b.components)
}

/// `a^dagger gamma0 b` on raw components.
pub fn bar(a: &CVector, b: &CVector) -> C64 {
    a.dot(&gamma::gamma0().apply(b))
}
