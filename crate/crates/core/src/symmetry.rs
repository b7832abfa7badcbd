//! Discrete-symmetry and basis-rotation operators on 4-spinors, with a
//! composition calculus that tracks antilinearity and momentum reflection.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gamma::{alpha_dot, gamma, gamma0, gamma5};
use crate::kinematics::{boost_half, parity_reflect, AngularParams, FourMomentum, Side};
use crate::matrix::{
    c, pauli, phase, sigma_dot, solve_intertwiner_constrained, CMatrix, CVector, C64, I, ONE, ZERO,
};
use crate::spinors::{
    dirac_spinor, dirac_spinor_from, elko_helicity, helicity_two_spinor, lambda_spinor,
    rho_spinor, Basis, Family, Index, Kind, PhaseConfig,
};
use crate::tolerance::{IDENTITY, MINUS_Z_AXIS, UNIT_PHASE};

/// A momentum together with the angles used to label helicity states.
///
/// The angles travel with the momentum so that a parity image carries
/// `(pi - theta, pi + phi)` rather than angles recomputed from `-p`; the two
/// differ by `2 pi` in `phi`, which flips the sign of half-angle spinors.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MomentumPoint {
    pub p: FourMomentum,
    pub angles: AngularParams,
}

impl MomentumPoint {
    pub fn new(p: FourMomentum) -> Result<Self> {
        Ok(Self {
            p,
            angles: p.angles()?,
        })
    }

    pub fn reflected(&self) -> Self {
        Self {
            p: parity_reflect(&self.p),
            angles: self.angles.reflected(),
        }
    }
}

/// `(O psi)(k) = phase * M * K^antilinear psi(R^reflects k)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SymmetryOperator {
    pub matrix: CMatrix,
    pub antilinear: bool,
    pub reflects_momentum: bool,
    pub phase: C64,
}

impl SymmetryOperator {
    pub fn new(matrix: CMatrix, antilinear: bool, reflects_momentum: bool, phase: C64) -> Result<Self> {
        if (phase.norm() - 1.0).abs() > UNIT_PHASE {
            return Err(Error::Domain(format!("operator phase {phase} is not unimodular")));
        }
        if !matrix.is_square() {
            return Err(Error::Dimension("operator matrix must be square".into()));
        }
        Ok(Self {
            matrix,
            antilinear,
            reflects_momentum,
            phase,
        })
    }

    pub fn linear(matrix: CMatrix) -> Self {
        Self {
            matrix,
            antilinear: false,
            reflects_momentum: false,
            phase: ONE,
        }
    }

    /// `phase * matrix`.
    pub fn effective_matrix(&self) -> CMatrix {
        self.matrix.scale(self.phase)
    }

    /// `self o other`.
    pub fn compose(&self, other: &SymmetryOperator) -> SymmetryOperator {
        let (m2, ph2) = if self.antilinear {
            (other.matrix.conj(), other.phase.conj())
        } else {
            (other.matrix.clone(), other.phase)
        };
        SymmetryOperator {
            matrix: &self.matrix * &m2,
            antilinear: self.antilinear ^ other.antilinear,
            reflects_momentum: self.reflects_momentum ^ other.reflects_momentum,
            phase: self.phase * ph2,
        }
    }

    /// Action on a single spinor value, ignoring momentum reflection.
    pub fn apply(&self, v: &CVector) -> CVector {
        let v = if self.antilinear { v.conj() } else { v.clone() };
        self.matrix.apply(&v).scale(self.phase)
    }

    /// Action on a momentum-space field, evaluated at `k`.
    pub fn act<F>(&self, field: F, k: &MomentumPoint) -> Result<CVector>
    where
        F: Fn(&MomentumPoint) -> Result<CVector>,
    {
        let at = if self.reflects_momentum { k.reflected() } else { *k };
        Ok(self.apply(&field(&at)?))
    }
}

/// `(||AB - BA||, ||AB + BA||)` for operators with matching flags, compared
/// through their composed matrices.
pub fn relation_residuals(a: &SymmetryOperator, b: &SymmetryOperator) -> (f64, f64) {
    let ab = a.compose(b).effective_matrix();
    let ba = b.compose(a).effective_matrix();
    ((&ab - &ba).frobenius_norm(), (&ab + &ba).frobenius_norm())
}

/// `C = -e^{i theta_c} gamma^2 K`.
pub fn charge_conjugation(cfg: &PhaseConfig) -> SymmetryOperator {
    SymmetryOperator {
        matrix: -&gamma(2),
        antilinear: true,
        reflects_momentum: false,
        phase: phase(cfg.theta_c),
    }
}

/// `P = gamma0 R`.
pub fn parity_operator() -> SymmetryOperator {
    SymmetryOperator {
        matrix: gamma0(),
        antilinear: false,
        reflects_momentum: true,
        phase: ONE,
    }
}

pub fn chirality() -> SymmetryOperator {
    SymmetryOperator::linear(gamma5())
}

/// `h = (1/2) block-diag(sigma . n, sigma . n)`.
pub fn helicity_operator(p: &FourMomentum) -> Result<SymmetryOperator> {
    let sn = sigma_dot(p.direction()?).scale_re(0.5);
    Ok(SymmetryOperator::linear(CMatrix::block_diag(&sn, &sn)))
}

/// `eta = -gamma5 h`.
pub fn chiral_helicity_operator(p: &FourMomentum) -> Result<SymmetryOperator> {
    let h = helicity_operator(p)?;
    Ok(SymmetryOperator::linear(-&(&gamma5() * &h.matrix)))
}

/// Rayleigh quotient of `a` at `v` and the relative eigen-residual
/// `||a v - q v|| / ||v||`, which is the smallest over all candidate eigenvalues.
pub fn eigen_residual(a: &CMatrix, v: &CVector) -> (C64, f64) {
    let av = a.apply(v);
    let n2 = v.dot(v).re;
    let q = v.dot(&av) / n2;
    (q, (&av - &v.scale(q)).norm() / n2.sqrt())
}

/// Chiral-helicity eigenvalue carried by a helicity-basis λ/ρ spinor.
///
/// The index is the helicity of the 2-spinor that defines the spinor
/// (the left block for λ, the right block for ρ), so the two families carry
/// opposite `eta` for the same index.
pub fn chiral_helicity_label(family: Family, index: Index) -> f64 {
    let h = index.helicity().sign() * 0.5;
    match family {
        Family::Rho => -h,
        _ => h,
    }
}

/// `block-diag(U, U)` with `U = N [[1, p_l/(|p|+pz)], [-p_r/(|p|+pz), 1]]`,
/// `N = sqrt((|p| + pz) / (2|p|))`, so that the result is unitary with unit determinant.
pub fn u1(p: &FourMomentum) -> Result<CMatrix> {
    let k = p.magnitude();
    if k == 0.0 {
        return Err(Error::DirectionUndefined);
    }
    let d = k + p.pz();
    if d <= MINUS_Z_AXIS * k {
        return Err(Error::CoordinateSingularity(d));
    }
    let u = CMatrix::from_rows([[ONE, p.p_l() / d], [-p.p_r() / d, ONE]])
        .scale_re((d / (2.0 * k)).sqrt());
    Ok(CMatrix::block_diag(&u, &u))
}

/// Permutation exchanging components 2 and 4 (1-based).
pub fn u2() -> CMatrix {
    CMatrix::from_real_rows([
        [1.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, 1.0],
        [0.0, 0.0, 1.0, 0.0],
        [0.0, 1.0, 0.0, 0.0],
    ])
}

/// Permutation exchanging components 2 and 3 (1-based).
pub fn u3() -> CMatrix {
    CMatrix::from_real_rows([
        [1.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, 1.0, 0.0],
        [0.0, 1.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, 1.0],
    ])
}

/// The 2x2 `Xi` with `Xi Lambda_{R,L}(p) Xi^-1 = Lambda_{R,L}(p)*`.
///
/// For a single boost the intertwiner space is two-dimensional (anything
/// of the form `Xi (a + b sigma . p)`), so the solve also demands that
/// `Xi` commute with `sigma_3`. That selects the diagonal solution, which is
/// then normalized by the matrix-core rule (unit Frobenius norm, first entry
/// real positive). For `p` along the z axis the problem stays ambiguous.
pub fn xi_matrix(p: &FourMomentum) -> Result<CMatrix> {
    p.direction()?;
    let r = boost_half(p, Side::Right);
    let rc = r.conj();
    let s3 = &pauli()[2];
    let xi = solve_intertwiner_constrained(&[(&r, &rc), (s3, s3)])?;
    // Xi Lambda_R = Lambda_R* Xi is the solved relation; Lambda_R Xi^-1 form
    // and the left-handed boost are checked here.
    let l = boost_half(p, Side::Left);
    let resid = (&(&xi * &l) - &(&l.conj() * &xi)).frobenius_norm();
    if resid > IDENTITY {
        return Err(Error::Domain(format!(
            "Xi fails to intertwine the left-handed boost (residual {resid:e})"
        )));
    }
    Ok(xi)
}

/// Unitary `Xi` with the phase pinned by the azimuth of `p`:
/// `e^{i phi} sqrt(2) xi_matrix(p)`, which equals `diag(e^{i phi}, e^{-i phi})`.
pub fn xi_unitary(p: &FourMomentum) -> Result<CMatrix> {
    let xi = xi_matrix(p)?;
    let phi = p.angles()?.phi();
    Ok(xi.scale(phase(phi) * 2.0_f64.sqrt()))
}

/// One of the four `Xi`-built transforms of a self/anti-self conjugate λ spinor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum XiTransform {
    /// `block-diag(Xi, Xi)`, image `lambda_A*`.
    First,
    /// `block-diag(i Xi, -i Xi)`, image `-i lambda_S*`.
    Second,
    /// `[[0, i Xi], [i Xi, 0]]`, image `i gamma0 lambda_A*`.
    Third,
    /// `[[0, Xi], [-Xi, 0]]`, image `gamma0 lambda_S*`.
    Fourth,
}

impl XiTransform {
    pub const ALL: [XiTransform; 4] = [
        XiTransform::First,
        XiTransform::Second,
        XiTransform::Third,
        XiTransform::Fourth,
    ];

    pub fn label(self) -> &'static str {
        match self {
            XiTransform::First => "first",
            XiTransform::Second => "second",
            XiTransform::Third => "third",
            XiTransform::Fourth => "fourth",
        }
    }

    /// Expected image of `lambda` (of kind `kind`) in terms of the partner
    /// `lambda` of the opposite kind: `(use_partner, prefactor, apply_gamma0)`.
    fn target(self) -> (bool, C64, bool) {
        match self {
            XiTransform::First => (true, ONE, false),
            XiTransform::Second => (false, -I, false),
            XiTransform::Third => (true, I, true),
            XiTransform::Fourth => (false, ONE, true),
        }
    }
}

/// The four block transforms built from [`xi_unitary`].
pub fn lambda_basis_transforms(p: &FourMomentum) -> Result<[(XiTransform, CMatrix); 4]> {
    let xi = xi_unitary(p)?;
    let z = CMatrix::zeros(2, 2);
    let ixi = xi.scale(I);
    Ok([
        (XiTransform::First, CMatrix::block_diag(&xi, &xi)),
        (XiTransform::Second, CMatrix::block_diag(&ixi, &-&ixi)),
        (XiTransform::Third, CMatrix::from_blocks(&z, &ixi, &ixi, &z)),
        (XiTransform::Fourth, CMatrix::from_blocks(&z, &xi, &-&xi, &z)),
    ])
}

/// Expected image of `T lambda_S` for a transform: `lambda_A*`, `-i lambda_S*`,
/// `i gamma0 lambda_A*` or `gamma0 lambda_S*`.
pub fn xi_transform_target(t: XiTransform, lambda_s: &CVector, lambda_a: &CVector) -> CVector {
    let (partner, k, g0) = t.target();
    let base = if partner { lambda_a } else { lambda_s }.conj().scale(k);
    if g0 {
        gamma0().apply(&base)
    } else {
        base
    }
}

/// `cos(alpha) - i sin(alpha) gamma5` for λ, `cos(alpha) + i sin(alpha) gamma5` for ρ.
pub fn chiral_gauge_transform(alpha: f64, family: Family) -> Result<CMatrix> {
    let sign = match family {
        Family::Lambda => -1.0,
        Family::Rho => 1.0,
        _ => return Err(Error::Domain(format!("chiral gauge acts on λ/ρ, not {family}"))),
    };
    let (s, co) = alpha.sin_cos();
    Ok(&CMatrix::identity(4).scale_re(co) + &gamma5().scale(c(0.0, sign * s)))
}

/// `c0 + i tau . c` on a doublet index; requires `c0^2 + |c|^2 = 1`.
pub fn su2_phase_transform(c0: f64, cv: [f64; 3]) -> Result<CMatrix> {
    let n2 = c0 * c0 + cv.iter().map(|x| x * x).sum::<f64>();
    if (n2 - 1.0).abs() > IDENTITY {
        return Err(Error::Domain(format!(
            "c0^2 + |c|^2 = {n2}, expected 1"
        )));
    }
    Ok(&CMatrix::identity(2).scale_re(c0) + &sigma_dot(cv).scale(I))
}

/// `(cos phi, n sin phi)` parametrization of [`su2_phase_transform`].
pub fn su2_from_angle(angle: f64, axis: [f64; 3]) -> Result<CMatrix> {
    let n = axis.iter().map(|x| x * x).sum::<f64>().sqrt();
    if n == 0.0 {
        return Err(Error::Domain("SU(2) axis must be nonzero".into()));
    }
    let (s, co) = angle.sin_cos();
    su2_phase_transform(co, axis.map(|x| x / n * s))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    Commute,
    Anticommute,
    Neither,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CpFamily {
    Dirac,
    Elko,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ActionClassification {
    pub relation: Relation,
    /// Residual of the reported relation (the smaller of the two when neither holds).
    pub max_residual: f64,
    pub commute_residual: f64,
    pub anticommute_residual: f64,
}

type Field = Box<dyn Fn(&MomentumPoint) -> Result<CVector> + Sync>;

/// The momentum-space fields making up a family in the given basis.
pub fn family_fields(basis: Basis, family: CpFamily, cfg: PhaseConfig) -> Vec<(String, Field)> {
    let mut out: Vec<(String, Field)> = Vec::new();
    match family {
        CpFamily::Dirac => {
            for fam in [Family::U, Family::V] {
                for index in Index::BOTH {
                    let f: Field = match basis {
                        Basis::Spinorial => Box::new(move |k: &MomentumPoint| {
                            Ok(dirac_spinor(&k.p, fam, index, Basis::Spinorial)?.components)
                        }),
                        Basis::Helicity => Box::new(move |k: &MomentumPoint| {
                            let chi = helicity_two_spinor(&k.angles, index.helicity(), &cfg).components;
                            Ok(dirac_spinor_from(&k.p, fam, index, Basis::Helicity, &chi)?.components)
                        }),
                    };
                    out.push((format!("{fam}.{index}"), f));
                }
            }
        }
        CpFamily::Elko => {
            for fam in [Family::Lambda, Family::Rho] {
                for kind in [Kind::S, Kind::A] {
                    for index in Index::BOTH {
                        let f: Field = match basis {
                            Basis::Spinorial => Box::new(move |k: &MomentumPoint| {
                                let b = match fam {
                                    Family::Lambda => lambda_spinor(&k.p, kind, index)?,
                                    _ => rho_spinor(&k.p, kind, index)?,
                                };
                                Ok(b.components)
                            }),
                            Basis::Helicity => Box::new(move |k: &MomentumPoint| {
                                Ok(elko_helicity(&k.p, &k.angles, fam, kind, index, &cfg)?.components)
                            }),
                        };
                        out.push((format!("{fam}{kind}.{index}"), f));
                    }
                }
            }
        }
    }
    out
}

/// Applies `C o P` and `P o C` to every member of the family at every momentum
/// and classifies the pair as commuting or anticommuting on that set.
///
/// Residuals are relative to the spinor norm and maximized over the set.
pub fn classify_cp_action(
    basis: Basis,
    family: CpFamily,
    momenta: &[FourMomentum],
    cfg: &PhaseConfig,
) -> Result<ActionClassification> {
    let cop = charge_conjugation(cfg);
    let pop = parity_operator();
    let cp = cop.compose(&pop);
    let pc = pop.compose(&cop);
    let fields = family_fields(basis, family, *cfg);
    let (mut comm, mut anti) = (0.0_f64, 0.0_f64);
    for p in momenta {
        let k = MomentumPoint::new(*p)?;
        for (_, f) in &fields {
            let norm = f(&k)?.norm();
            let a = cp.act(f, &k)?;
            let b = pc.act(f, &k)?;
            comm = comm.max((&a - &b).norm() / norm);
            anti = anti.max((&a + &b).norm() / norm);
        }
    }
    Ok(classify(comm, anti, IDENTITY))
}

pub fn classify(commute_residual: f64, anticommute_residual: f64, tol: f64) -> ActionClassification {
    let (relation, max_residual) = if commute_residual <= tol {
        (Relation::Commute, commute_residual)
    } else if anticommute_residual <= tol {
        (Relation::Anticommute, anticommute_residual)
    } else {
        (Relation::Neither, commute_residual.min(anticommute_residual))
    };
    ActionClassification {
        relation,
        max_residual,
        commute_residual,
        anticommute_residual,
    }
}

/// Expresses `v` in the span of `basis` by least squares on the normal
/// equations; returns the coefficients and the relative fit residual.
pub fn span_fit(basis: &[CVector], v: &CVector) -> Result<(Vec<C64>, f64)> {
    let n = basis.len();
    let mut gram = CMatrix::zeros(n, n);
    let mut rhs = vec![ZERO; n];
    for i in 0..n {
        for j in 0..n {
            gram[(i, j)] = basis[i].dot(&basis[j]);
        }
        rhs[i] = basis[i].dot(v);
    }
    let inv = gram.inverse()?;
    let coeffs: Vec<C64> = (0..n)
        .map(|i| (0..n).map(|j| inv[(i, j)] * rhs[j]).sum())
        .collect();
    let mut fit = CVector::zeros(v.dim());
    for (k, b) in coeffs.iter().zip(basis) {
        fit = &fit + &b.scale(*k);
    }
    Ok((coeffs, (v - &fit).norm() / v.norm()))
}

/// `alpha . n` for the direction of `p`.
pub fn alpha_along(p: &FourMomentum) -> Result<CMatrix> {
    Ok(alpha_dot(p.direction()?))
}
