//! Dirac matrices in the chiral (Weyl) basis.
//!
//! The upper two components of a bispinor are right-handed:
//! `gamma5 = diag(1, 1, -1, -1)`, `gamma0 = [[0, 1], [1, 0]]`,
//! `gamma^i = [[0, -sigma_i], [sigma_i, 0]]`. Metric signature is `(+, -, -, -)`.

use crate::matrix::{pauli, CMatrix};

pub fn gamma0() -> CMatrix {
    let one = CMatrix::identity(2);
    let zero = CMatrix::zeros(2, 2);
    CMatrix::from_blocks(&zero, &one, &one, &zero)
}

/// Spatial gamma matrix `gamma^k`, `k` in `1..=3`.
pub fn gamma(k: usize) -> CMatrix {
    assert!((1..=3).contains(&k), "spatial gamma index must be 1, 2 or 3");
    let s = &pauli()[k - 1];
    let zero = CMatrix::zeros(2, 2);
    CMatrix::from_blocks(&zero, &-s, s, &zero)
}

pub fn gamma5() -> CMatrix {
    CMatrix::diag_re(&[1.0, 1.0, -1.0, -1.0])
}

/// `gamma^mu k_mu = gamma0 k0 - gamma . k`.
pub fn slash(k0: f64, k: [f64; 3]) -> CMatrix {
    let mut m = gamma0().scale_re(k0);
    for (i, &ki) in k.iter().enumerate() {
        m = &m - &gamma(i + 1).scale_re(ki);
    }
    m
}

/// `alpha . n = gamma0 (gamma . n)`.
pub fn alpha_dot(n: [f64; 3]) -> CMatrix {
    let g0 = gamma0();
    let mut m = CMatrix::zeros(4, 4);
    for (i, &ni) in n.iter().enumerate() {
        m = &m + &(&g0 * &gamma(i + 1)).scale_re(ni);
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    fn metric(mu: usize) -> f64 {
        if mu == 0 {
            1.0
        } else {
            -1.0
        }
    }

    fn g(mu: usize) -> CMatrix {
        if mu == 0 {
            gamma0()
        } else {
            gamma(mu)
        }
    }

    #[test]
    fn clifford_algebra() {
        for mu in 0..4 {
            for nu in 0..4 {
                let ac = g(mu).anticommutator(&g(nu));
                let expect = if mu == nu {
                    CMatrix::identity(4).scale_re(2.0 * metric(mu))
                } else {
                    CMatrix::zeros(4, 4)
                };
                assert!(ac.distance(&expect) < 1e-15, "mu={mu} nu={nu}");
            }
            assert!(g(mu).anticommutator(&gamma5()).max_abs() < 1e-15);
        }
    }

    #[test]
    fn gamma5_is_product() {
        let prod = &(&(&gamma0() * &gamma(1)) * &gamma(2)) * &gamma(3);
        let i = crate::matrix::I;
        assert!(prod.scale(i).distance(&gamma5()) < 1e-15);
    }

    #[test]
    fn gamma2_is_the_only_imaginary_one() {
        assert_eq!(gamma(2).conj(), -&gamma(2));
        for k in [1, 3] {
            assert_eq!(gamma(k).conj(), gamma(k));
        }
    }
}
