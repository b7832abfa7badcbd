//! Dense complex matrices and vectors of small fixed shapes.
//!
//! Everything in this crate lives in spaces of dimension 2, 3, 4, 6 or 8, so
//! storage is a flat row-major `Vec` and the algorithms are the textbook
//! ones: LU with partial pivoting for determinants and inverses, and
//! Gauss-Jordan elimination with rank detection for null spaces.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::tolerance;

pub type C64 = Complex64;

pub const ZERO: C64 = C64::new(0.0, 0.0);
pub const ONE: C64 = C64::new(1.0, 0.0);
pub const I: C64 = C64::new(0.0, 1.0);

/// Shorthand for a complex literal.
#[inline]
pub const fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

/// Unit-modulus complex number `e^{i theta}`.
#[inline]
pub fn phase(theta: f64) -> C64 {
    C64::from_polar(1.0, theta)
}

const SUPPORTED_DIMS: [usize; 5] = [2, 3, 4, 6, 8];

/// Column vector of complex components.
#[derive(Clone, Debug, PartialEq)]
pub struct CVector(Vec<C64>);

impl CVector {
    pub fn new(entries: Vec<C64>) -> Result<Self> {
        if !SUPPORTED_DIMS.contains(&entries.len()) {
            return Err(Error::Dimension(format!(
                "vector dimension {} not in {:?}",
                entries.len(),
                SUPPORTED_DIMS
            )));
        }
        Ok(Self(entries))
    }

    pub fn zeros(dim: usize) -> Self {
        Self(vec![ZERO; dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn as_slice(&self) -> &[C64] {
        &self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, C64> {
        self.0.iter()
    }

    pub fn norm(&self) -> f64 {
        self.0.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Hermitian inner product `<self|other>` (conjugate-linear in `self`).
    pub fn dot(&self, other: &CVector) -> C64 {
        assert_eq!(self.dim(), other.dim(), "dot: dimension mismatch");
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    pub fn conj(&self) -> Self {
        Self(self.0.iter().map(|z| z.conj()).collect())
    }

    pub fn scale(&self, k: C64) -> Self {
        Self(self.0.iter().map(|z| z * k).collect())
    }

    pub fn scale_re(&self, k: f64) -> Self {
        Self(self.0.iter().map(|z| z * k).collect())
    }

    /// Concatenation `(self, other)`.
    pub fn stack(&self, other: &CVector) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Self(v)
    }

    /// Components `[start, start + len)` as a new vector.
    pub fn segment(&self, start: usize, len: usize) -> Self {
        Self(self.0[start..start + len].to_vec())
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    /// Distance `min_c |self - c * other|` over complex scalars `c`, together with the optimal `c`.
    pub fn projection_residual(&self, other: &CVector) -> (C64, f64) {
        let denom = other.dot(other);
        if denom.re == 0.0 {
            return (ZERO, self.norm());
        }
        let k = other.dot(self) / denom;
        (k, (self - &other.scale(k)).norm())
    }
}

impl<const N: usize> From<[C64; N]> for CVector {
    fn from(a: [C64; N]) -> Self {
        assert!(SUPPORTED_DIMS.contains(&N), "unsupported vector dimension {N}");
        Self(a.to_vec())
    }
}

impl Index<usize> for CVector {
    type Output = C64;
    fn index(&self, i: usize) -> &C64 {
        &self.0[i]
    }
}

impl IndexMut<usize> for CVector {
    fn index_mut(&mut self, i: usize) -> &mut C64 {
        &mut self.0[i]
    }
}

impl Add for &CVector {
    type Output = CVector;
    fn add(self, rhs: &CVector) -> CVector {
        assert_eq!(self.dim(), rhs.dim(), "add: dimension mismatch");
        CVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &CVector {
    type Output = CVector;
    fn sub(self, rhs: &CVector) -> CVector {
        assert_eq!(self.dim(), rhs.dim(), "sub: dimension mismatch");
        CVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &CVector {
    type Output = CVector;
    fn neg(self) -> CVector {
        CVector(self.0.iter().map(|z| -z).collect())
    }
}

/// Dense complex matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct CMatrix {
    rows: usize,
    cols: usize,
    data: Vec<C64>,
}

impl CMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<C64>) -> Result<Self> {
        if rows == 0 || cols == 0 || rows * cols != data.len() {
            return Err(Error::Dimension(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                data.len()
            )));
        }
        Ok(Self { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::diag(&vec![ONE; n])
    }

    pub fn diag(entries: &[C64]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, &z) in entries.iter().enumerate() {
            m[(i, i)] = z;
        }
        m
    }

    pub fn diag_re(entries: &[f64]) -> Self {
        Self::diag(&entries.iter().map(|&x| c(x, 0.0)).collect::<Vec<_>>())
    }

    /// Square matrix from an array of rows.
    pub fn from_rows<const N: usize>(rows: [[C64; N]; N]) -> Self {
        Self {
            rows: N,
            cols: N,
            data: rows.iter().flatten().copied().collect(),
        }
    }

    /// Square real matrix from an array of rows.
    pub fn from_real_rows<const N: usize>(rows: [[f64; N]; N]) -> Self {
        Self {
            rows: N,
            cols: N,
            data: rows.iter().flatten().map(|&x| c(x, 0.0)).collect(),
        }
    }

    pub fn column(v: &CVector) -> Self {
        Self {
            rows: v.dim(),
            cols: 1,
            data: v.as_slice().to_vec(),
        }
    }

    /// `[[a, b], [c, d]]` from four equally shaped square blocks.
    pub fn from_blocks(a: &CMatrix, b: &CMatrix, cc: &CMatrix, d: &CMatrix) -> Self {
        let n = a.rows;
        for blk in [a, b, cc, d] {
            assert!(
                blk.rows == n && blk.cols == n,
                "from_blocks: blocks must share one square shape"
            );
        }
        let mut m = Self::zeros(2 * n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = a[(i, j)];
                m[(i, j + n)] = b[(i, j)];
                m[(i + n, j)] = cc[(i, j)];
                m[(i + n, j + n)] = d[(i, j)];
            }
        }
        m
    }

    pub fn block_diag(a: &CMatrix, d: &CMatrix) -> Self {
        let z = Self::zeros(a.rows, a.cols);
        Self::from_blocks(a, &z, &z, d)
    }

    /// Square block `[r0, r0 + n) x [c0, c0 + n)`.
    pub fn block(&self, r0: usize, c0: usize, n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = self[(r0 + i, c0 + j)];
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[C64] {
        &self.data
    }

    pub fn mul(&self, rhs: &CMatrix) -> Result<CMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == ZERO {
                    continue;
                }
                for j in 0..rhs.cols {
                    out.data[i * rhs.cols + j] += a * rhs[(k, j)];
                }
            }
        }
        Ok(out)
    }

    pub fn try_apply(&self, v: &CVector) -> Result<CVector> {
        if self.cols != v.dim() {
            return Err(Error::Dimension(format!(
                "cannot apply {}x{} to a {}-vector",
                self.rows,
                self.cols,
                v.dim()
            )));
        }
        let out = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self[(i, j)] * v[j]).sum())
            .collect();
        Ok(CVector(out))
    }

    /// Matrix-vector product. Panics on shape mismatch.
    pub fn apply(&self, v: &CVector) -> CVector {
        self.try_apply(v).expect("apply: shape mismatch")
    }

    pub fn adjoint(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].conj();
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)];
            }
        }
        out
    }

    pub fn conj(&self) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|z| z.conj()).collect(),
        }
    }

    pub fn scale(&self, k: C64) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|z| z * k).collect(),
        }
    }

    pub fn scale_re(&self, k: f64) -> Self {
        self.scale(c(k, 0.0))
    }

    pub fn trace(&self) -> C64 {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Frobenius distance `||self - other||_F`.
    pub fn distance(&self, other: &CMatrix) -> f64 {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "distance: shape mismatch"
        );
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    pub fn commutator(&self, other: &CMatrix) -> Self {
        &(self * other) - &(other * self)
    }

    pub fn anticommutator(&self, other: &CMatrix) -> Self {
        &(self * other) + &(other * self)
    }

    /// `||A^dagger A - 1||_F`.
    pub fn unitarity_defect(&self) -> f64 {
        (&self.adjoint() * self).distance(&Self::identity(self.cols))
    }

    fn require_square(&self, what: &str) -> Result<()> {
        if !self.is_square() {
            return Err(Error::Dimension(format!(
                "{what} needs a square matrix, got {}x{}",
                self.rows, self.cols
            )));
        }
        Ok(())
    }

    /// Determinant by LU decomposition with partial pivoting.
    pub fn det(&self) -> Result<C64> {
        self.require_square("det")?;
        let n = self.rows;
        let mut a = self.data.clone();
        let mut det = ONE;
        for k in 0..n {
            let p = (k..n)
                .max_by(|&x, &y| a[x * n + k].norm().total_cmp(&a[y * n + k].norm()))
                .unwrap_or(k);
            if a[p * n + k] == ZERO {
                return Ok(ZERO);
            }
            if p != k {
                for j in 0..n {
                    a.swap(k * n + j, p * n + j);
                }
                det = -det;
            }
            let pivot = a[k * n + k];
            det *= pivot;
            for i in k + 1..n {
                let f = a[i * n + k] / pivot;
                if f == ZERO {
                    continue;
                }
                for j in k..n {
                    let akj = a[k * n + j];
                    a[i * n + j] -= f * akj;
                }
            }
        }
        Ok(det)
    }

    /// Inverse by Gauss-Jordan elimination with partial pivoting.
    pub fn inverse(&self) -> Result<CMatrix> {
        self.require_square("inverse")?;
        let n = self.rows;
        let scale = self.max_abs();
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for k in 0..n {
            let p = (k..n)
                .max_by(|&x, &y| a[(x, k)].norm().total_cmp(&a[(y, k)].norm()))
                .unwrap_or(k);
            if a[(p, k)].norm() <= tolerance::RANK * scale * f64::EPSILON.sqrt() {
                return Err(Error::Domain("matrix is singular".into()));
            }
            a.swap_rows(k, p);
            inv.swap_rows(k, p);
            let pivot = a[(k, k)];
            for j in 0..n {
                a[(k, j)] /= pivot;
                inv[(k, j)] /= pivot;
            }
            for i in 0..n {
                if i == k {
                    continue;
                }
                let f = a[(i, k)];
                if f == ZERO {
                    continue;
                }
                for j in 0..n {
                    let akj = a[(k, j)];
                    let ikj = inv[(k, j)];
                    a[(i, j)] -= f * akj;
                    inv[(i, j)] -= f * ikj;
                }
            }
        }
        Ok(inv)
    }

    fn swap_rows(&mut self, r1: usize, r2: usize) {
        if r1 == r2 {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(r1 * self.cols + j, r2 * self.cols + j);
        }
    }

    /// Taylor polynomial of the exponential truncated after `terms` terms.
    pub fn exp_series(&self, terms: usize) -> Result<CMatrix> {
        self.require_square("exp_series")?;
        let n = self.rows;
        let mut sum = Self::identity(n);
        let mut term = Self::identity(n);
        for k in 1..terms {
            term = (&term * self).scale_re(1.0 / k as f64);
            sum = &sum + &term;
        }
        Ok(sum)
    }

    /// Orthonormal-free basis of the null space `{x : self x = 0}`.
    ///
    /// Rank is decided by Gauss-Jordan elimination with partial pivoting; a
    /// pivot is treated as zero when it falls below `tolerance::RANK` times
    /// the largest entry.
    pub fn null_space(&self) -> Vec<CVector> {
        let (rows, cols) = (self.rows, self.cols);
        let cutoff = tolerance::RANK * self.max_abs().max(f64::MIN_POSITIVE);
        let mut a = self.clone();
        let mut pivot_cols = Vec::new();
        let mut r = 0;
        for col in 0..cols {
            if r == rows {
                break;
            }
            let p = (r..rows)
                .max_by(|&x, &y| a[(x, col)].norm().total_cmp(&a[(y, col)].norm()))
                .unwrap_or(r);
            if a[(p, col)].norm() <= cutoff {
                for i in r..rows {
                    a[(i, col)] = ZERO;
                }
                continue;
            }
            a.swap_rows(r, p);
            let pivot = a[(r, col)];
            for j in col..cols {
                a[(r, j)] /= pivot;
            }
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let f = a[(i, col)];
                if f == ZERO {
                    continue;
                }
                for j in col..cols {
                    let rj = a[(r, j)];
                    a[(i, j)] -= f * rj;
                }
            }
            pivot_cols.push(col);
            r += 1;
        }
        let free: Vec<usize> = (0..cols).filter(|c| !pivot_cols.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut x = vec![ZERO; cols];
                x[f] = ONE;
                for (row, &pc) in pivot_cols.iter().enumerate() {
                    x[pc] = -a[(row, f)];
                }
                CVector(x)
            })
            .collect()
    }
}

impl Index<(usize, usize)> for CMatrix {
    type Output = C64;
    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for CMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &CMatrix {
    type Output = CMatrix;
    fn mul(self, rhs: &CMatrix) -> CMatrix {
        CMatrix::mul(self, rhs).expect("matrix product: shape mismatch")
    }
}

impl Mul<&CVector> for &CMatrix {
    type Output = CVector;
    fn mul(self, rhs: &CVector) -> CVector {
        self.apply(rhs)
    }
}

impl Add for &CMatrix {
    type Output = CMatrix;
    fn add(self, rhs: &CMatrix) -> CMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "add: shape mismatch");
        CMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &CMatrix {
    type Output = CMatrix;
    fn sub(self, rhs: &CMatrix) -> CMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "sub: shape mismatch");
        CMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &CMatrix {
    type Output = CMatrix;
    fn neg(self) -> CMatrix {
        self.scale_re(-1.0)
    }
}

impl fmt::Display for CMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|j| {
                    let z = self[(i, j)];
                    format!("{:+.6}{:+.6}i", z.re, z.im)
                })
                .collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Solves `X A_k = B_k X` simultaneously for every pair `(A_k, B_k)`.
///
/// The solution is the null space of the stacked linear map
/// `X -> (X A_k - B_k X)_k` acting on row-major `vec(X)`. A unique solution
/// (one-dimensional null space) is returned with unit Frobenius norm and its
/// first nonzero entry real and positive.
pub fn solve_intertwiner_constrained(pairs: &[(&CMatrix, &CMatrix)]) -> Result<CMatrix> {
    let Some(&(first, _)) = pairs.first() else {
        return Err(Error::Dimension("no matrix pairs given".into()));
    };
    let n = first.rows;
    for (a, b) in pairs {
        if !a.is_square() || !b.is_square() || a.rows != n || b.rows != n {
            return Err(Error::Dimension(format!(
                "intertwiner pairs must all be {n}x{n}"
            )));
        }
    }
    let nn = n * n;
    let mut map = CMatrix::zeros(nn * pairs.len(), nn);
    for (block, (a, b)) in pairs.iter().enumerate() {
        let off = block * nn;
        for i in 0..n {
            for j in 0..n {
                let row = off + i * n + j;
                for k in 0..n {
                    // (XA)_ij = sum_k X_ik A_kj
                    map[(row, i * n + k)] += a[(k, j)];
                    // (BX)_ij = sum_k B_ik X_kj
                    map[(row, k * n + j)] -= b[(i, k)];
                }
            }
        }
    }
    let null = map.null_space();
    match null.len() {
        0 => Err(Error::NoIntertwiner),
        1 => {
            let v = &null[0];
            let norm = v.norm();
            let lead_cut = 1e-8 * v.iter().map(|z| z.norm()).fold(0.0, f64::max);
            let lead = v
                .iter()
                .find(|z| z.norm() > lead_cut)
                .copied()
                .unwrap_or(ONE);
            let fix = lead.conj() / (lead.norm() * norm);
            CMatrix::new(n, n, v.scale(fix).0)
        }
        d => Err(Error::AmbiguousIntertwiner(d)),
    }
}

/// Single-pair form of [`solve_intertwiner_constrained`]: nonzero `X` with `X A = B X`.
pub fn solve_intertwiner(a: &CMatrix, b: &CMatrix) -> Result<CMatrix> {
    solve_intertwiner_constrained(&[(a, b)])
}

/// Pauli matrices `[sigma_1, sigma_2, sigma_3]`.
pub fn pauli() -> [CMatrix; 3] {
    [
        CMatrix::from_rows([[ZERO, ONE], [ONE, ZERO]]),
        CMatrix::from_rows([[ZERO, -I], [I, ZERO]]),
        CMatrix::from_rows([[ONE, ZERO], [ZERO, -ONE]]),
    ]
}

/// `sigma . a` for a real 3-vector `a`.
pub fn sigma_dot(a: [f64; 3]) -> CMatrix {
    let [s1, s2, s3] = pauli();
    &(&s1.scale_re(a[0]) + &s2.scale_re(a[1])) + &s3.scale_re(a[2])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_times_sigma2() {
        let [_, s2, _] = pauli();
        assert_eq!(&CMatrix::identity(2) * &s2, s2);
        assert_eq!(&s2 * &s2, CMatrix::identity(2));
    }

    #[test]
    fn mul_shape_mismatch_is_dimension_error() {
        let a = CMatrix::zeros(2, 3);
        let b = CMatrix::zeros(2, 2);
        assert!(matches!(a.mul(&b), Err(Error::Dimension(_))));
        assert!(matches!(a.det(), Err(Error::Dimension(_))));
    }

    #[test]
    fn determinants() {
        let [_, s2, _] = pauli();
        assert_eq!(CMatrix::identity(4).det().unwrap(), ONE);
        assert!((s2.det().unwrap() + ONE).norm() < 1e-15);
        let perm = CMatrix::from_real_rows([
            [1.0, 0.0, 0.0, 0.0],
            [0.0, 0.0, 0.0, 1.0],
            [0.0, 0.0, 1.0, 0.0],
            [0.0, 1.0, 0.0, 0.0],
        ]);
        assert!((perm.det().unwrap() + ONE).norm() < 1e-15);
    }

    #[test]
    fn vector_dimension_invariant() {
        assert!(CVector::new(vec![ONE; 5]).is_err());
        assert!(CVector::new(vec![ONE; 6]).is_ok());
    }

    #[test]
    fn inverse_roundtrip() {
        let m = CMatrix::from_rows([[c(1.0, 2.0), c(0.5, 0.0)], [c(0.0, -1.0), c(3.0, 1.0)]]);
        let inv = m.inverse().unwrap();
        assert!((&m * &inv).distance(&CMatrix::identity(2)) < 1e-14);
        assert!(CMatrix::zeros(2, 2).inverse().is_err());
    }

    #[test]
    fn commutant_of_sigma3_is_ambiguous() {
        let [_, _, s3] = pauli();
        assert_eq!(
            solve_intertwiner(&s3, &s3),
            Err(Error::AmbiguousIntertwiner(2))
        );
    }

    #[test]
    fn sigma2_against_its_conjugate_is_ambiguous() {
        let [_, s2, _] = pauli();
        assert_eq!(
            solve_intertwiner(&s2, &s2.conj()),
            Err(Error::AmbiguousIntertwiner(2))
        );
    }

    #[test]
    fn no_intertwiner_between_distinct_spectra() {
        let a = CMatrix::diag_re(&[1.0, 2.0]);
        let b = CMatrix::diag_re(&[3.0, 4.0]);
        assert_eq!(solve_intertwiner(&a, &b), Err(Error::NoIntertwiner));
    }

    #[test]
    fn unique_intertwiner_is_normalized() {
        // sigma_1 -> sigma_3 and sigma_3 -> sigma_1: X is the Hadamard matrix up to scale.
        let [s1, _, s3] = pauli();
        let x = solve_intertwiner_constrained(&[(&s1, &s3), (&s3, &s1)]).unwrap();
        assert!((x.frobenius_norm() - 1.0).abs() < 1e-14);
        assert!(x[(0, 0)].im.abs() < 1e-15 && x[(0, 0)].re > 0.0);
        assert!((&(&x * &s1) - &(&s3 * &x)).frobenius_norm() < 1e-14);
        assert!((x[(0, 0)] - c(0.5, 0.0)).norm() < 1e-14);
        assert!((x[(1, 1)] + c(0.5, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn exp_series_of_nilpotent() {
        let n = CMatrix::from_rows([[ZERO, ONE], [ZERO, ZERO]]);
        let e = n.exp_series(10).unwrap();
        assert_eq!(e, CMatrix::from_rows([[ONE, ONE], [ZERO, ONE]]));
    }

    #[test]
    fn projection_residual_recovers_phase() {
        let v = CVector::from([c(1.0, 2.0), c(-0.5, 0.3)]);
        let w = v.scale(phase(0.7));
        let (k, r) = w.projection_residual(&v);
        assert!(r < 1e-15);
        assert!((k - phase(0.7)).norm() < 1e-15);
    }
}
