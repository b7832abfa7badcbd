//! Momentum-space wave equations: the coupled λ/ρ system, the doubled Dirac
//! system, the two-mass equation with a `gamma5` mass term, and the
//! 8-component assembly with its axial gauge structure.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gamma::{alpha_dot, gamma5, slash};
use crate::kinematics::{FourMomentum, FourVector};
use crate::matrix::{CMatrix, CVector, C64};
use crate::spinors::{bar, dirac_spinor, lambda_spinor, rho_spinor, Basis, Family, Index, Kind};
use crate::symmetry::chiral_gauge_transform;
use crate::tolerance::{IDENTITY, MASS_SHELL};

/// `gamma^mu p_mu`.
pub fn dirac_matrix(p: &FourMomentum) -> CMatrix {
    slash(p.energy(), p.three_momentum())
}

/// Plane-wave association for the two pairs `(lambda^S, rho^A)` and
/// `(lambda^A, rho^S)` that share a mass term.
///
/// `Plus`: the first pair goes with `e^{-ip.x}` and the second with `e^{+ip.x}`.
/// `Minus`: the reverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FrequencyConvention {
    Plus,
    Minus,
}

impl FrequencyConvention {
    pub const BOTH: [FrequencyConvention; 2] = [FrequencyConvention::Plus, FrequencyConvention::Minus];

    /// Sign of `i d/dx` on the `(lambda^S, rho^A)` pair.
    pub fn sign(self) -> f64 {
        match self {
            FrequencyConvention::Plus => 1.0,
            FrequencyConvention::Minus => -1.0,
        }
    }

    pub fn opposite(self) -> Self {
        match self {
            FrequencyConvention::Plus => FrequencyConvention::Minus,
            FrequencyConvention::Minus => FrequencyConvention::Plus,
        }
    }
}

impl fmt::Display for FrequencyConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FrequencyConvention::Plus => "plus",
            FrequencyConvention::Minus => "minus",
        })
    }
}

impl FromStr for FrequencyConvention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plus" => Ok(FrequencyConvention::Plus),
            "minus" => Ok(FrequencyConvention::Minus),
            _ => Err(Error::Usage(format!("unknown frequency convention '{s}'"))),
        }
    }
}

/// Which mass-coupled pair an 8-component spinor holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Pairing {
    /// `(lambda^S, rho^A)`, coupled with `-m`.
    SelfAnti,
    /// `(lambda^A, rho^S)`, coupled with `+m`.
    AntiSelf,
}

impl Pairing {
    pub const BOTH: [Pairing; 2] = [Pairing::SelfAnti, Pairing::AntiSelf];

    pub fn kinds(self) -> (Kind, Kind) {
        match self {
            Pairing::SelfAnti => (Kind::S, Kind::A),
            Pairing::AntiSelf => (Kind::A, Kind::S),
        }
    }

    /// Sign of the mass coupling in `i d lambda -/+ m rho = 0`.
    fn mass_sign(self) -> f64 {
        match self {
            Pairing::SelfAnti => 1.0,
            Pairing::AntiSelf => -1.0,
        }
    }

    /// Momentum sign of `i d/dx` for this pair under a convention.
    fn momentum_sign(self, conv: FrequencyConvention) -> f64 {
        match self {
            Pairing::SelfAnti => conv.sign(),
            Pairing::AntiSelf => -conv.sign(),
        }
    }
}

/// λ-sector on top, ρ-sector below; both at the same momentum.
#[derive(Clone, Debug, PartialEq)]
pub struct EightSpinor {
    pub upper: CVector,
    pub lower: CVector,
    pub momentum: FourMomentum,
}

impl EightSpinor {
    /// The pair at `p` with chiral-helicity index `index`.
    pub fn pair(p: &FourMomentum, pairing: Pairing, index: Index) -> Result<Self> {
        let (lk, rk) = pairing.kinds();
        Ok(Self {
            upper: lambda_spinor(p, lk, index)?.components,
            lower: rho_spinor(p, rk, index)?.components,
            momentum: *p,
        })
    }

    pub fn stacked(&self) -> CVector {
        self.upper.stack(&self.lower)
    }

    /// λ-sector transformed by `cos a - i sin a gamma5`, ρ-sector by `cos a + i sin a gamma5`.
    pub fn gauge_rotated(&self, alpha: f64) -> Result<Self> {
        Ok(Self {
            upper: chiral_gauge_transform(alpha, Family::Lambda)?.apply(&self.upper),
            lower: chiral_gauge_transform(alpha, Family::Rho)?.apply(&self.lower),
            momentum: self.momentum,
        })
    }
}

/// The four coupled-equation residuals at `p`, each maximized over the
/// `up`/`down` index and divided by the norm of the pair involved:
///
/// `s gamma.p lambda^S - m rho^A`, `s gamma.p rho^A - m lambda^S`,
/// `-s gamma.p lambda^A + m rho^S`, `-s gamma.p rho^S + m lambda^A`,
/// with `s` the sign of [`FrequencyConvention`]. The residuals carry units of mass.
pub fn coupled_system_residual(p: &FourMomentum, conv: FrequencyConvention) -> Result<[f64; 4]> {
    let g = dirac_matrix(p);
    let m = p.mass();
    let mut out = [0.0_f64; 4];
    for index in Index::BOTH {
        for (slot, pairing) in Pairing::BOTH.into_iter().enumerate() {
            let pair = EightSpinor::pair(p, pairing, index)?;
            let s = pairing.momentum_sign(conv);
            let k = pairing.mass_sign();
            let norm = pair.stacked().norm();
            let r1 = &g.apply(&pair.upper).scale_re(s) - &pair.lower.scale_re(k * m);
            let r2 = &g.apply(&pair.lower).scale_re(s) - &pair.upper.scale_re(k * m);
            out[2 * slot] = out[2 * slot].max(r1.norm() / norm);
            out[2 * slot + 1] = out[2 * slot + 1].max(r2.norm() / norm);
        }
    }
    Ok(out)
}

/// Outcome of trying both conventions on a set of momenta. Residuals are in units of `m`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConventionDiscovery {
    /// The single convention under which every residual vanishes, if exactly one does.
    pub convention: Option<FrequencyConvention>,
    pub plus_max: f64,
    pub minus_max: f64,
    /// Smallest residual seen under the losing convention, in units of `m`.
    pub losing_min: f64,
}

pub fn discover_convention(momenta: &[FourMomentum]) -> Result<ConventionDiscovery> {
    let mut max = [0.0_f64; 2];
    let mut min = [f64::INFINITY; 2];
    for p in momenta {
        for (i, conv) in FrequencyConvention::BOTH.into_iter().enumerate() {
            let r = coupled_system_residual(p, conv)?;
            let worst = r.iter().fold(0.0_f64, |a, &b| a.max(b)) / p.mass();
            max[i] = max[i].max(worst);
            min[i] = min[i].min(worst);
        }
    }
    let ok = [max[0] <= IDENTITY, max[1] <= IDENTITY];
    let (convention, losing_min) = match ok {
        [true, false] => (Some(FrequencyConvention::Plus), min[1]),
        [false, true] => (Some(FrequencyConvention::Minus), min[0]),
        _ => (None, min[0].min(min[1])),
    };
    Ok(ConventionDiscovery {
        convention,
        plus_max: max[0],
        minus_max: max[1],
        losing_min,
    })
}

/// `chi = (psi1 + psi2)/sqrt 2`, `eta = (psi1 - psi2)/sqrt 2`.
pub fn markov_from(psi1: &CVector, psi2: &CVector) -> (CVector, CVector) {
    let k = std::f64::consts::FRAC_1_SQRT_2;
    ((psi1 + psi2).scale_re(k), (psi1 - psi2).scale_re(k))
}

/// Doubled-Dirac superposition built from `psi1 = u(p)` (mass `+m`) and
/// `psi2 = v(p)` (mass `-m`) with the given index.
pub fn markov_superposition(p: &FourMomentum, index: Index) -> Result<(CVector, CVector)> {
    let u = dirac_spinor(p, Family::U, index, Basis::Spinorial)?.components;
    let v = dirac_spinor(p, Family::V, index, Basis::Spinorial)?.components;
    Ok(markov_from(&u, &v))
}

/// `(||gamma.p chi - m eta||, ||gamma.p eta - m chi||)`, relative to `||(chi, eta)||`.
pub fn markov_residual(p: &FourMomentum, chi: &CVector, eta: &CVector) -> (f64, f64) {
    let g = dirac_matrix(p);
    let m = p.mass();
    let norm = chi.stack(eta).norm();
    (
        (&g.apply(chi) - &eta.scale_re(m)).norm() / norm,
        (&g.apply(eta) - &chi.scale_re(m)).norm() / norm,
    )
}

/// `gamma.k - m1 - m2 gamma5` for an unconstrained four-vector `k`.
pub fn sen_gupta_operator(k: &FourVector, m1: f64, m2: f64) -> CMatrix {
    let id = CMatrix::identity(4);
    &(&slash(k.e, k.p) - &id.scale_re(m1)) - &gamma5().scale_re(m2)
}

/// `||(gamma.k - m1 - m2 gamma5) psi|| / ||psi||`.
pub fn sen_gupta_residual(k: &FourVector, m1: f64, m2: f64, psi: &CVector) -> f64 {
    sen_gupta_operator(k, m1, m2).apply(psi).norm() / psi.norm()
}

/// Whether `k^2 = m1^2 - m2^2` within tolerance relative to the largest scale.
pub fn sen_gupta_on_shell(k: &FourVector, m1: f64, m2: f64) -> bool {
    let scale = (k.e * k.e + k.magnitude().powi(2) + m1 * m1 + m2 * m2).max(f64::MIN_POSITIVE);
    (k.square() - (m1 * m1 - m2 * m2)).abs() <= MASS_SHELL * scale
}

/// Orthonormal basis of the solution space; empty off the mass shell.
pub fn sen_gupta_null_space(k: &FourVector, m1: f64, m2: f64) -> Vec<CVector> {
    if !sen_gupta_on_shell(k, m1, m2) {
        return Vec::new();
    }
    orthonormalize(&sen_gupta_operator(k, m1, m2).null_space())
}

/// `exp(gamma5 beta / 2)` with `tanh beta = m2 / m1`; maps two-mass solutions
/// to solutions of the ordinary equation with mass [`sen_gupta_dirac_mass`].
pub fn sen_gupta_equivalence(m1: f64, m2: f64) -> Result<CMatrix> {
    if !(m2.abs() < m1.abs()) {
        return Err(Error::Domain(format!(
            "equivalence needs |m2| < |m1|, got m1 = {m1}, m2 = {m2}"
        )));
    }
    let beta = (m2 / m1).atanh();
    let (ch, sh) = ((beta / 2.0).cosh(), (beta / 2.0).sinh());
    Ok(&CMatrix::identity(4).scale_re(ch) + &gamma5().scale_re(sh))
}

/// `m1 sqrt(1 - (m2/m1)^2)`, the mass of the equivalent ordinary equation.
pub fn sen_gupta_dirac_mass(m1: f64, m2: f64) -> f64 {
    m1 * (1.0 - (m2 / m1).powi(2)).sqrt()
}

/// How far the two-mass solutions are from eigenstates of `alpha . k/|k|`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ChiralityStudy {
    pub null_dimension: usize,
    /// `min over unit psi in the solution space, lambda = +/-1, of ||(alpha.n - lambda) psi||`.
    pub min_eigen_residual: f64,
    /// `||(1 - P) (alpha.n) P||` with `P` the projector onto the solution space.
    pub invariance_defect: f64,
}

pub fn sen_gupta_chirality_study(k: &FourVector, m1: f64, m2: f64) -> Result<ChiralityStudy> {
    let kk = k.magnitude();
    if kk == 0.0 {
        return Err(Error::DirectionUndefined);
    }
    let a = alpha_dot(k.p.map(|x| x / kk));
    let basis = sen_gupta_null_space(k, m1, m2);
    if basis.is_empty() {
        return Ok(ChiralityStudy {
            null_dimension: 0,
            min_eigen_residual: f64::NAN,
            invariance_defect: f64::NAN,
        });
    }
    let mut min_res = f64::INFINITY;
    for lam in [1.0, -1.0] {
        let shifted = &a - &CMatrix::identity(4).scale_re(lam);
        let images: Vec<CVector> = basis.iter().map(|b| shifted.apply(b)).collect();
        min_res = min_res.min(smallest_singular_value(&images)?);
    }
    let mut defect = 0.0_f64;
    for b in &basis {
        let ab = a.apply(b);
        let mut out = ab.clone();
        for q in &basis {
            out = &out - &q.scale(q.dot(&ab));
        }
        defect += out.norm().powi(2);
    }
    Ok(ChiralityStudy {
        null_dimension: basis.len(),
        min_eigen_residual: min_res,
        invariance_defect: defect.sqrt(),
    })
}

/// Gram-Schmidt with re-orthogonalization.
pub fn orthonormalize(vectors: &[CVector]) -> Vec<CVector> {
    let mut out: Vec<CVector> = Vec::new();
    for v in vectors {
        let mut w = v.clone();
        for _ in 0..2 {
            for q in &out {
                w = &w - &q.scale(q.dot(&w));
            }
        }
        let n = w.norm();
        if n > 1e-10 * v.norm() {
            out.push(w.scale_re(1.0 / n));
        }
    }
    out
}

/// Smallest singular value of the matrix whose columns are `cols` (at most two columns).
fn smallest_singular_value(cols: &[CVector]) -> Result<f64> {
    match cols {
        [a] => Ok(a.norm()),
        [a, b] => {
            let (g11, g22) = (a.dot(a).re, b.dot(b).re);
            let g12 = a.dot(b);
            let tr = g11 + g22;
            let det = g11 * g22 - g12.norm_sqr();
            let disc = (tr * tr - 4.0 * det).max(0.0).sqrt();
            // smaller root via det / larger root avoids cancellation
            let big = (tr + disc) / 2.0;
            let small = if big > 0.0 { det / big } else { 0.0 };
            Ok(small.max(0.0).sqrt())
        }
        _ => Err(Error::Dimension(format!(
            "solution space of dimension {} not supported",
            cols.len()
        ))),
    }
}

/// `diag(gamma5, -gamma5)`.
pub fn lambda5() -> CMatrix {
    let g5 = gamma5();
    CMatrix::block_diag(&g5, &-&g5)
}

/// 8x8 operator of the pair under a convention:
/// `[[s gamma.p, -k m], [-k m, s gamma.p]]`, `k = +1` for `(lambda^S, rho^A)`, `-1` otherwise.
pub fn eight_component_operator(p: &FourMomentum, conv: FrequencyConvention, pairing: Pairing) -> CMatrix {
    let g = dirac_matrix(p).scale_re(pairing.momentum_sign(conv));
    let mass = CMatrix::identity(4).scale_re(-pairing.mass_sign() * p.mass());
    CMatrix::from_blocks(&g, &mass, &mass, &g)
}

/// Kinetic part `block-diag(gamma.p, gamma.p)` and mass part `[[0, 1], [1, 0]]` of the 8x8 operator.
pub fn eight_component_parts(p: &FourMomentum) -> (CMatrix, CMatrix) {
    let g = dirac_matrix(p);
    let z = CMatrix::zeros(4, 4);
    let id = CMatrix::identity(4);
    (CMatrix::block_diag(&g, &g), CMatrix::from_blocks(&z, &id, &id, &z))
}

/// Max over pairings and indices of `||O psi|| / ||psi||`, with the spinors
/// optionally rotated by the axial transform with angle `alpha` first.
pub fn eight_component_residual(p: &FourMomentum, conv: FrequencyConvention, alpha: f64) -> Result<f64> {
    let mut worst = 0.0_f64;
    for pairing in Pairing::BOTH {
        let op = eight_component_operator(p, conv, pairing);
        for index in Index::BOTH {
            let psi = EightSpinor::pair(p, pairing, index)?.gauge_rotated(alpha)?.stacked();
            worst = worst.max(op.apply(&psi).norm() / psi.norm());
        }
    }
    Ok(worst / p.mass())
}

/// The four fields entering the mass term, at one momentum.
#[derive(Clone, Debug, PartialEq)]
pub struct MassTermFields {
    pub lambda_s: CVector,
    pub rho_a: CVector,
    pub lambda_a: CVector,
    pub rho_s: CVector,
}

impl MassTermFields {
    pub fn at(p: &FourMomentum, index: Index) -> Result<Self> {
        Ok(Self {
            lambda_s: lambda_spinor(p, Kind::S, index)?.components,
            rho_a: rho_spinor(p, Kind::A, index)?.components,
            lambda_a: lambda_spinor(p, Kind::A, index)?.components,
            rho_s: rho_spinor(p, Kind::S, index)?.components,
        })
    }

    /// Real superpositions `a up + b down` of each field, `weights` ordered as
    /// `[lambda^S, rho^A, lambda^A, rho^S]`. Real weights keep every field an
    /// eigenvector of charge conjugation; a single index alone gives a zero mass term.
    pub fn superposed(p: &FourMomentum, weights: [[f64; 2]; 4]) -> Result<Self> {
        let up = Self::at(p, Index::Up)?;
        let down = Self::at(p, Index::Down)?;
        let mix = |a: &CVector, b: &CVector, w: [f64; 2]| &a.scale_re(w[0]) + &b.scale_re(w[1]);
        Ok(Self {
            lambda_s: mix(&up.lambda_s, &down.lambda_s, weights[0]),
            rho_a: mix(&up.rho_a, &down.rho_a, weights[1]),
            lambda_a: mix(&up.lambda_a, &down.lambda_a, weights[2]),
            rho_s: mix(&up.rho_s, &down.rho_s, weights[3]),
        })
    }

    /// Every λ multiplied by `gl`, every ρ by `gr`.
    pub fn transformed(&self, gl: &CMatrix, gr: &CMatrix) -> Self {
        Self {
            lambda_s: gl.apply(&self.lambda_s),
            rho_a: gr.apply(&self.rho_a),
            lambda_a: gl.apply(&self.lambda_a),
            rho_s: gr.apply(&self.rho_s),
        }
    }

    /// Doublets `(lambda^S, lambda^A)` and `(rho^A, -rho^S)` both rotated by `u`.
    pub fn su2_rotated(&self, u: &CMatrix) -> Self {
        let mix = |a: &CVector, b: &CVector, i: usize| &a.scale(u[(i, 0)]) + &b.scale(u[(i, 1)]);
        let minus_rho_s = -&self.rho_s;
        Self {
            lambda_s: mix(&self.lambda_s, &self.lambda_a, 0),
            lambda_a: mix(&self.lambda_s, &self.lambda_a, 1),
            rho_a: mix(&self.rho_a, &minus_rho_s, 0),
            rho_s: -&mix(&self.rho_a, &minus_rho_s, 1),
        }
    }
}

/// `-m (lambdaS-bar rhoA + rhoA-bar lambdaS - lambdaA-bar rhoS - rhoS-bar lambdaA)`.
pub fn lagrangian_mass_term(f: &MassTermFields, m: f64) -> C64 {
    let s = bar(&f.lambda_s, &f.rho_a) + bar(&f.rho_a, &f.lambda_s)
        - bar(&f.lambda_a, &f.rho_s)
        - bar(&f.rho_s, &f.lambda_a);
    s * (-m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::ONE;
    use crate::sampling::Sampler;
    use crate::symmetry::su2_from_angle;

    #[test]
    fn slash_squares_to_mass() {
        let p = FourMomentum::new(0.3, 1.7, -2.2, 1.5).unwrap();
        let g = dirac_matrix(&p);
        assert!((&g * &g).distance(&CMatrix::identity(4).scale_re(2.25)) < 1e-12);
        let rest = FourMomentum::at_rest(2.0).unwrap();
        assert!(dirac_matrix(&rest).distance(&crate::gamma::gamma0().scale_re(2.0)) < 1e-15);
    }

    #[test]
    fn rest_frame_convention() {
        let p = FourMomentum::at_rest(1.3).unwrap();
        let good = coupled_system_residual(&p, FrequencyConvention::Plus).unwrap();
        assert!(good.iter().all(|&r| r < 1e-15));
        let bad = coupled_system_residual(&p, FrequencyConvention::Minus).unwrap();
        assert!(bad.iter().all(|&r| r > 1.3));
    }

    #[test]
    fn convention_is_unique() {
        let momenta = Sampler::new(11).momenta(30);
        let d = discover_convention(&momenta).unwrap();
        assert_eq!(d.convention, Some(FrequencyConvention::Plus));
        assert!(d.losing_min > 0.5);
    }

    #[test]
    fn markov_pair_and_reduction() {
        let p = FourMomentum::new(1.0, -0.5, 0.25, 0.7).unwrap();
        let (chi, eta) = markov_superposition(&p, Index::Down).unwrap();
        let (a, b) = markov_residual(&p, &chi, &eta);
        assert!(a < 1e-13 && b < 1e-13);
        let u = dirac_spinor(&p, Family::U, Index::Up, Basis::Spinorial).unwrap().components;
        let (chi, eta) = markov_from(&u, &CVector::zeros(4));
        assert_eq!(chi, eta);
    }

    #[test]
    fn sen_gupta_dimension_and_reduction() {
        let k = FourVector::new(2.0, [0.0, 0.0, 1.0]);
        assert_eq!(sen_gupta_null_space(&k, 2.0, 1.0).len(), 2);
        assert!(sen_gupta_null_space(&k, 2.0, 0.5).is_empty());
        let p = FourMomentum::new(0.4, 0.1, -0.3, 1.1).unwrap();
        let u = dirac_spinor(&p, Family::U, Index::Up, Basis::Spinorial).unwrap().components;
        assert!(sen_gupta_residual(&p.four_vector(), 1.1, 0.0, &u) < 1e-14);
    }

    #[test]
    fn sen_gupta_equivalence_maps_to_dirac() {
        let (m1, m2) = (2.0, 1.0);
        let k = FourVector::new(2.0, [0.6, -0.8, 0.0]);
        let s = sen_gupta_equivalence(m1, m2).unwrap();
        let mass = sen_gupta_dirac_mass(m1, m2);
        assert!((mass - 3.0_f64.sqrt()).abs() < 1e-15);
        for psi in sen_gupta_null_space(&k, m1, m2) {
            assert!(sen_gupta_residual(&k, mass, 0.0, &s.apply(&psi)) < 1e-13);
        }
        assert!(sen_gupta_equivalence(1.0, 1.0).is_err());
    }

    #[test]
    fn spacelike_solutions_are_not_chirality_eigenstates() {
        let k = FourVector::new(1.2, [0.0, 1.6, 1.2]);
        let study = sen_gupta_chirality_study(&k, 0.0, 1.6).unwrap();
        assert_eq!(study.null_dimension, 2);
        assert!(study.min_eigen_residual > 0.1);
    }

    #[test]
    fn lambda5_squares_to_identity_and_anticommutes() {
        let l5 = lambda5();
        assert_eq!(&l5 * &l5, CMatrix::identity(8));
        let p = FourMomentum::new(0.2, 0.9, 0.4, 1.0).unwrap();
        let (kin, mass) = eight_component_parts(&p);
        assert!(l5.anticommutator(&kin).max_abs() < 1e-15);
        assert!(l5.anticommutator(&mass).max_abs() < 1e-15);
        assert!(l5.commutator(&kin).max_abs() > 0.5);
    }

    #[test]
    fn eight_component_solutions_survive_axial_rotation() {
        let p = FourMomentum::new(-1.0, 0.4, 2.0, 0.6).unwrap();
        for alpha in [0.0, 0.7, -2.1] {
            assert!(eight_component_residual(&p, FrequencyConvention::Plus, alpha).unwrap() < 1e-13);
        }
        assert!(eight_component_residual(&p, FrequencyConvention::Minus, 0.0).unwrap() > 0.5);
    }

    #[test]
    fn mass_term_invariances() {
        let p = FourMomentum::new(0.8, 0.3, -0.6, 0.9).unwrap();
        let single = MassTermFields::at(&p, Index::Up).unwrap();
        assert!(lagrangian_mass_term(&single, 0.9).norm() < 1e-14);
        let w = [[1.0, 0.5], [-0.3, 2.0], [0.7, 0.7], [1.5, -1.0]];
        let f = MassTermFields::superposed(&p, w).unwrap();
        let base = lagrangian_mass_term(&f, 0.9);
        assert!(base.im.abs() < 1e-13);
        assert!(base.re.abs() > 0.1);
        let gl = chiral_gauge_transform(1.1, Family::Lambda).unwrap();
        let gr = chiral_gauge_transform(1.1, Family::Rho).unwrap();
        assert!((lagrangian_mass_term(&f.transformed(&gl, &gr), 0.9) - base).norm() < 1e-13);
        let u = su2_from_angle(0.7, [1.0, -2.0, 0.5]).unwrap();
        assert!((lagrangian_mass_term(&f.su2_rotated(&u), 0.9) - base).norm() < 1e-13);
        let id = f.su2_rotated(&CMatrix::identity(2).scale(ONE));
        assert_eq!(id, f);
    }
}
