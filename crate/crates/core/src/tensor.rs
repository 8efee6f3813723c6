//! Dense complex linear algebra for the small (3, 9, 27, 81 dimensional)
//! operators used throughout the crate.
//!
//! Matrices are stored row-major. Equality between matrices is never tested
//! exactly; callers compare [`ComplexMatrix::dist`] against a tolerance.

use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Default tolerance for identity checks (Hermiticity, unitarity, ...).
pub const DEFAULT_TOL: f64 = 1e-10;

pub const ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub const ONE: Complex64 = Complex64::new(1.0, 0.0);
pub const I: Complex64 = Complex64::new(0.0, 1.0);

/// Shorthand for building a complex number.
#[inline]
pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Dense complex matrix, row-major.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        Self {
            rows,
            cols,
            data: vec![ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = ONE;
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    /// Builds a matrix from row-major entries.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<Complex64>) -> Result<Self> {
        if rows == 0 || cols == 0 || data.len() != rows * cols {
            return Err(Error::BadShape {
                expected: format!("{rows}x{cols} entries"),
                found: format!("{} entries", data.len()),
            });
        }
        Ok(Self { rows, cols, data })
    }

    pub fn from_real_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        let m = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != m) {
            return Err(Error::BadShape {
                expected: "rectangular rows".into(),
                found: "ragged rows".into(),
            });
        }
        Self::from_vec(n, m, rows.iter().flatten().map(|&x| c(x, 0.0)).collect())
    }

    pub fn diag(values: &[Complex64]) -> Self {
        let mut m = Self::zeros(values.len(), values.len());
        for (i, &v) in values.iter().enumerate() {
            m[(i, i)] = v;
        }
        m
    }

    pub fn diag_real(values: &[f64]) -> Self {
        Self::diag(&values.iter().map(|&v| c(v, 0.0)).collect::<Vec<_>>())
    }

    /// Matrix unit `|i><j|` of size `n`.
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(n, n);
        m[(i, j)] = ONE;
        m
    }

    /// Outer product `|u><v|`.
    pub fn outer(u: &[Complex64], v: &[Complex64]) -> Self {
        Self::from_fn(u.len(), v.len(), |i, j| u[i] * v[j].conj())
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[Complex64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Complex64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn conj(&self) -> Self {
        self.map(|z| z.conj())
    }

    pub fn map(&self, f: impl Fn(Complex64) -> Complex64) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&z| f(z)).collect(),
        }
    }

    pub fn scale(&self, s: Complex64) -> Self {
        self.map(|z| z * s)
    }

    pub fn scale_real(&self, s: f64) -> Self {
        self.map(|z| z * s)
    }

    /// Kronecker product: `(a⊗b)[i*br+k, j*bc+l] = a[i,j]·b[k,l]`.
    pub fn kron(&self, other: &Self) -> Self {
        let (br, bc) = (other.rows, other.cols);
        let mut out = Self::zeros(self.rows * br, self.cols * bc);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self[(i, j)];
                if a == ZERO {
                    continue;
                }
                for k in 0..br {
                    for l in 0..bc {
                        out[(i * br + k, j * bc + l)] = a * other[(k, l)];
                    }
                }
            }
        }
        out
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(
            self.cols, other.rows,
            "matmul dimension mismatch: {}x{} * {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == ZERO {
                    continue;
                }
                let src = other.row(k);
                let dst = &mut out.data[i * other.cols..(i + 1) * other.cols];
                for (d, &b) in dst.iter_mut().zip(src) {
                    *d += a * b;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(self.cols, v.len(), "matrix-vector dimension mismatch");
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(&a, &b)| a * b).sum())
            .collect()
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Frobenius distance `‖self − other‖`.
    pub fn dist(&self, other: &Self) -> f64 {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// `‖A − A†‖`, or infinity for non-square input.
    pub fn hermiticity_residual(&self) -> f64 {
        if !self.is_square() {
            return f64::INFINITY;
        }
        self.dist(&self.dagger())
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermiticity_residual() <= tol
    }

    /// `‖A†A − I‖`.
    pub fn unitarity_residual(&self) -> f64 {
        self.dagger().matmul(self).dist(&Self::identity(self.cols))
    }

    /// `[A, B] = AB − BA`.
    pub fn commutator(&self, other: &Self) -> Self {
        &self.matmul(other) - &other.matmul(self)
    }

    pub fn anticommutator(&self, other: &Self) -> Self {
        &self.matmul(other) + &other.matmul(self)
    }

    /// Principal submatrix on the given index list.
    pub fn submatrix(&self, idx: &[usize]) -> Self {
        Self::from_fn(idx.len(), idx.len(), |i, j| self[(idx[i], idx[j])])
    }

    /// Permutes rows and columns: `out[i, j] = self[perm[i], perm[j]]`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        assert!(self.is_square() && perm.len() == self.rows);
        self.submatrix(perm)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::identity(self.rows);
        for _ in 0..k {
            out = out.matmul(self);
        }
        out
    }

    fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::BadShape {
                expected: "square matrix".into(),
                found: format!("{}x{}", self.rows, self.cols),
            })
        }
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;
    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

macro_rules! elementwise {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait<&ComplexMatrix> for &ComplexMatrix {
            type Output = ComplexMatrix;
            fn $method(self, rhs: &ComplexMatrix) -> ComplexMatrix {
                assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
                ComplexMatrix {
                    rows: self.rows,
                    cols: self.cols,
                    data: self.data.iter().zip(&rhs.data).map(|(a, b)| a $op b).collect(),
                }
            }
        }
        impl $trait for ComplexMatrix {
            type Output = ComplexMatrix;
            fn $method(self, rhs: ComplexMatrix) -> ComplexMatrix {
                &self $op &rhs
            }
        }
    };
}

elementwise!(Add, add, +);
elementwise!(Sub, sub, -);

impl Mul<&ComplexMatrix> for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        self.matmul(rhs)
    }
}

impl Mul for ComplexMatrix {
    type Output = ComplexMatrix;
    fn mul(self, rhs: ComplexMatrix) -> ComplexMatrix {
        self.matmul(&rhs)
    }
}

impl Mul<&ComplexMatrix> for Complex64 {
    type Output = ComplexMatrix;
    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        rhs.scale(self)
    }
}

impl Mul<ComplexMatrix> for Complex64 {
    type Output = ComplexMatrix;
    fn mul(self, rhs: ComplexMatrix) -> ComplexMatrix {
        rhs.scale(self)
    }
}

impl Mul<&ComplexMatrix> for f64 {
    type Output = ComplexMatrix;
    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        rhs.scale_real(self)
    }
}

impl Mul<ComplexMatrix> for f64 {
    type Output = ComplexMatrix;
    fn mul(self, rhs: ComplexMatrix) -> ComplexMatrix {
        rhs.scale_real(self)
    }
}

impl Neg for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn neg(self) -> ComplexMatrix {
        self.map(|z| -z)
    }
}

impl Neg for ComplexMatrix {
    type Output = ComplexMatrix;
    fn neg(self) -> ComplexMatrix {
        -&self
    }
}

/// Free-function form of [`ComplexMatrix::kron`].
pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    a.kron(b)
}

/// Free-function form of [`ComplexMatrix::dagger`].
pub fn dagger(a: &ComplexMatrix) -> ComplexMatrix {
    a.dagger()
}

// ---------------------------------------------------------------------------
// vectors

/// `<u|v>`, conjugate-linear in the first argument.
pub fn inner(u: &[Complex64], v: &[Complex64]) -> Complex64 {
    assert_eq!(u.len(), v.len());
    u.iter().zip(v).map(|(a, b)| a.conj() * b).sum()
}

pub fn norm(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

pub fn normalized(v: &[Complex64]) -> Vec<Complex64> {
    let n = norm(v);
    v.iter().map(|z| z / n).collect()
}

pub fn basis_vector(n: usize, i: usize) -> Vec<Complex64> {
    let mut v = vec![ZERO; n];
    v[i] = ONE;
    v
}

pub fn vec_dist(u: &[Complex64], v: &[Complex64]) -> f64 {
    assert_eq!(u.len(), v.len());
    u.iter().zip(v).map(|(a, b)| (a - b).norm_sqr()).sum::<f64>().sqrt()
}

/// `1 − |<u|v>|` for unit vectors: zero iff the rays coincide.
pub fn ray_mismatch(u: &[Complex64], v: &[Complex64]) -> f64 {
    1.0 - inner(u, v).norm()
}

// ---------------------------------------------------------------------------
// Hermitian eigensolver

/// Eigenvalues (ascending) and orthonormal eigenvectors of a Hermitian matrix.
#[derive(Clone, Debug)]
pub struct EigenSystem {
    pub values: Vec<f64>,
    pub vectors: Vec<Vec<Complex64>>,
}

impl EigenSystem {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Largest `‖A v − λ v‖` over all pairs.
    pub fn max_residual(&self, a: &ComplexMatrix) -> f64 {
        self.values
            .iter()
            .zip(&self.vectors)
            .map(|(&l, v)| {
                let av = a.mul_vec(v);
                av.iter()
                    .zip(v)
                    .map(|(x, y)| (x - y * l).norm_sqr())
                    .sum::<f64>()
                    .sqrt()
            })
            .fold(0.0, f64::max)
    }

    /// `‖V†V − I‖` for the eigenvector matrix `V`.
    pub fn orthonormality_residual(&self) -> f64 {
        let n = self.len();
        let g = ComplexMatrix::from_fn(n, n, |i, j| inner(&self.vectors[i], &self.vectors[j]));
        g.dist(&ComplexMatrix::identity(n))
    }

    /// `Σ λ_i v_i v_i†`.
    pub fn reconstruct(&self) -> ComplexMatrix {
        let n = self.len();
        let mut out = ComplexMatrix::zeros(n, n);
        for (&l, v) in self.values.iter().zip(&self.vectors) {
            out = &out + &ComplexMatrix::outer(v, v).scale_real(l);
        }
        out
    }
}

const JACOBI_MAX_SWEEPS: usize = 100;

/// Eigen-decomposition of a Hermitian matrix by cyclic complex Jacobi
/// rotations, with Hermiticity checked at [`DEFAULT_TOL`].
pub fn eig_hermitian(a: &ComplexMatrix) -> Result<EigenSystem> {
    eig_hermitian_tol(a, DEFAULT_TOL)
}

pub fn eig_hermitian_tol(a: &ComplexMatrix, tol: f64) -> Result<EigenSystem> {
    a.require_square()?;
    let residual = a.hermiticity_residual();
    if residual > tol {
        return Err(Error::NotHermitian { residual, tol });
    }
    let n = a.rows;
    // Work on the Hermitian part so rounding asymmetry does not accumulate.
    let mut m = (a + &a.dagger()).scale_real(0.5);
    let mut v = ComplexMatrix::identity(n);
    let scale = m.frobenius_norm().max(f64::MIN_POSITIVE);

    for _ in 0..JACOBI_MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| m[(i, j)].norm_sqr())
            .sum::<f64>()
            .sqrt();
        if off <= 1e-15 * scale {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = m[(p, q)];
                let r = apq.norm();
                if r <= 1e-300 {
                    continue;
                }
                let phase = apq / r;
                let tau = (m[(q, q)].re - m[(p, p)].re) / (2.0 * r);
                let t = tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt());
                let t = if tau == 0.0 { 1.0 } else { t };
                let cs = 1.0 / (1.0 + t * t).sqrt();
                let sn = t * cs;
                // J = [[c, s·e^{iφ}], [−s·e^{−iφ}, c]] on (p, q); A ← J† A J.
                let jpq = phase * sn;
                let jqp = -phase.conj() * sn;
                for k in 0..n {
                    let akp = m[(k, p)];
                    let akq = m[(k, q)];
                    m[(k, p)] = akp * cs + akq * jqp;
                    m[(k, q)] = akp * jpq + akq * cs;
                }
                for k in 0..n {
                    let apk = m[(p, k)];
                    let aqk = m[(q, k)];
                    m[(p, k)] = apk * cs + aqk * jqp.conj();
                    m[(q, k)] = apk * jpq.conj() + aqk * cs;
                }
                m[(p, q)] = ZERO;
                m[(q, p)] = ZERO;
                m[(p, p)] = c(m[(p, p)].re, 0.0);
                m[(q, q)] = c(m[(q, q)].re, 0.0);
                for k in 0..n {
                    let vkp = v[(k, p)];
                    let vkq = v[(k, q)];
                    v[(k, p)] = vkp * cs + vkq * jqp;
                    v[(k, q)] = vkp * jpq + vkq * cs;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m[(i, i)].re.total_cmp(&m[(j, j)].re));
    Ok(EigenSystem {
        values: order.iter().map(|&i| m[(i, i)].re).collect(),
        vectors: order.iter().map(|&i| v.column(i)).collect(),
    })
}

/// Sum of absolute eigenvalues of a Hermitian matrix.
pub fn trace_norm_hermitian(a: &ComplexMatrix) -> Result<f64> {
    Ok(eig_hermitian(a)?.values.iter().map(|l| l.abs()).sum())
}

// ---------------------------------------------------------------------------
// matrix exponential

/// Matrix exponential by scaling and squaring around a truncated Taylor
/// series.
///
/// The argument is scaled by `2^-s` until its 1-norm is at most 1/2, the
/// series is summed to degree 20 (remainder below 1e-25 relative), and the
/// result is squared `s` times.
pub fn expm(a: &ComplexMatrix) -> ComplexMatrix {
    assert!(a.is_square(), "expm needs a square matrix");
    let n = a.rows;
    let norm1 = (0..n)
        .map(|j| (0..n).map(|i| a[(i, j)].norm()).sum::<f64>())
        .fold(0.0, f64::max);
    let mut squarings = 0u32;
    if norm1 > 0.5 {
        squarings = (norm1 / 0.5).log2().ceil() as u32;
    }
    let scaled = a.scale_real(0.5f64.powi(squarings as i32));

    let mut term = ComplexMatrix::identity(n);
    let mut sum = ComplexMatrix::identity(n);
    for k in 1..=20 {
        term = term.matmul(&scaled).scale_real(1.0 / k as f64);
        sum = &sum + &term;
    }
    for _ in 0..squarings {
        sum = sum.matmul(&sum);
    }
    sum
}

// ---------------------------------------------------------------------------
// bipartite qutrit helpers

/// Which factor of a two-qutrit system a partial operation acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Subsystem {
    A,
    B,
}

/// Partial transpose of a two-qutrit operator (9×9, lex order).
///
/// For subsystem A: `out[(jA,iB),(iA,jB)] = rho[(iA,iB),(jA,jB)]`.
pub fn partial_transpose(rho: &ComplexMatrix, subsystem: Subsystem) -> Result<ComplexMatrix> {
    if rho.rows != 9 || rho.cols != 9 {
        return Err(Error::BadShape {
            expected: "9x9".into(),
            found: format!("{}x{}", rho.rows, rho.cols),
        });
    }
    let mut out = ComplexMatrix::zeros(9, 9);
    for ia in 0..3 {
        for ib in 0..3 {
            for ja in 0..3 {
                for jb in 0..3 {
                    let v = rho[(3 * ia + ib, 3 * ja + jb)];
                    let (r, col) = match subsystem {
                        Subsystem::A => (3 * ja + ib, 3 * ia + jb),
                        Subsystem::B => (3 * ia + jb, 3 * ja + ib),
                    };
                    out[(r, col)] = v;
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_matrix(rng: &mut ChaCha8Rng, n: usize) -> ComplexMatrix {
        ComplexMatrix::from_fn(n, n, |_, _| c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
    }

    fn random_hermitian(rng: &mut ChaCha8Rng, n: usize) -> ComplexMatrix {
        let a = random_matrix(rng, n);
        (&a + &a.dagger()).scale_real(0.5)
    }

    /// Real roots of the characteristic polynomial of a 3×3 Hermitian matrix
    /// by the trigonometric cubic formula.
    fn cubic_eigenvalues(a: &ComplexMatrix) -> [f64; 3] {
        let tr = a.trace().re;
        let a2 = a.matmul(a).trace().re;
        let det = {
            let m = |i, j| a[(i, j)];
            (m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0))
                + m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0)))
            .re
        };
        // λ³ − c2 λ² + c1 λ − c0 with c2 = tr, c1 = (tr² − tr A²)/2, c0 = det
        let c2 = tr;
        let c1 = 0.5 * (tr * tr - a2);
        let c0 = det;
        let shift = c2 / 3.0;
        let p = c1 - c2 * c2 / 3.0;
        let q = -2.0 * c2.powi(3) / 27.0 + c2 * c1 / 3.0 - c0;
        let mut roots = if p.abs() < 1e-300 {
            [shift - q.cbrt(); 3]
        } else {
            let r = (-p / 3.0).sqrt();
            let arg = (3.0 * q / (2.0 * p) * (-3.0 / p).sqrt()).clamp(-1.0, 1.0);
            let phi = arg.acos() / 3.0;
            let tau = std::f64::consts::TAU;
            [0.0, 1.0, 2.0].map(|k| shift + 2.0 * r * (phi - tau * k / 3.0).cos())
        };
        roots.sort_by(f64::total_cmp);
        roots
    }

    #[test]
    fn kron_identity() {
        let i9 = kron(&ComplexMatrix::identity(3), &ComplexMatrix::identity(3));
        assert_eq!(i9.dist(&ComplexMatrix::identity(9)), 0.0);
    }

    #[test]
    fn kron_unit_matrices_swap_basis_states() {
        // e12 ⊗ e21 (1-based) sends |a=1,b=0> (lex 3) to |a=0,b=1> (lex 1).
        let op = kron(&ComplexMatrix::unit(3, 0, 1), &ComplexMatrix::unit(3, 1, 0));
        let out = op.mul_vec(&basis_vector(9, 3));
        assert_eq!(vec_dist(&out, &basis_vector(9, 1)), 0.0);
    }

    #[test]
    fn kron_mixed_product() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let (a, b, cm, d) = (
            random_matrix(&mut rng, 3),
            random_matrix(&mut rng, 3),
            random_matrix(&mut rng, 3),
            random_matrix(&mut rng, 3),
        );
        let lhs = kron(&a, &b).matmul(&kron(&cm, &d));
        let rhs = kron(&a.matmul(&cm), &b.matmul(&d));
        assert!(lhs.dist(&rhs) < 1e-12);
    }

    #[test]
    fn kron_associative_exactly() {
        // Gaussian-integer entries keep every product exact, so any mismatch
        // would be an indexing error.
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let mut int_matrix = |n| {
            ComplexMatrix::from_fn(n, n, |_, _| {
                c(rng.gen_range(-9..=9) as f64, rng.gen_range(-9..=9) as f64)
            })
        };
        let a = int_matrix(2);
        let b = int_matrix(3);
        let cm = int_matrix(2);
        assert_eq!(kron(&kron(&a, &b), &cm).dist(&kron(&a, &kron(&b, &cm))), 0.0);
    }

    #[test]
    fn dagger_involution() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let a = random_matrix(&mut rng, 9);
        assert_eq!(a.dagger().dagger(), a);
        assert_eq!(dagger(&ComplexMatrix::identity(9)), ComplexMatrix::identity(9));
    }

    #[test]
    fn eig_diagonal() {
        let es = eig_hermitian(&ComplexMatrix::diag_real(&[3.0, 1.0, 2.0])).unwrap();
        assert_eq!(es.values, vec![1.0, 2.0, 3.0]);
    }

    #[test]
    fn eig_rejects_non_hermitian() {
        let a = ComplexMatrix::unit(3, 0, 1);
        assert!(matches!(eig_hermitian(&a), Err(Error::NotHermitian { .. })));
        let r = ComplexMatrix::zeros(2, 3);
        assert!(matches!(eig_hermitian(&r), Err(Error::BadShape { .. })));
    }

    #[test]
    fn eig_random_hermitian_residuals() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..100 {
            let a = random_hermitian(&mut rng, 9);
            let es = eig_hermitian(&a).unwrap();
            assert!(es.max_residual(&a) < 1e-10);
            assert!(es.orthonormality_residual() < 1e-10);
            assert!(es.reconstruct().dist(&a) < 1e-10);
            assert!(es.values.windows(2).all(|w| w[0] <= w[1]));
        }
    }

    #[test]
    fn eig_three_by_three_matches_cubic_roots() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..50 {
            let a = random_hermitian(&mut rng, 3);
            let es = eig_hermitian(&a).unwrap();
            let roots = cubic_eigenvalues(&a);
            for (x, y) in es.values.iter().zip(roots) {
                assert!((x - y).abs() < 1e-10, "{x} vs {y}");
            }
        }
    }

    #[test]
    fn eig_degenerate_gives_orthonormal_basis() {
        let a = ComplexMatrix::diag_real(&[2.0, 2.0, 2.0, -1.0]);
        let u = expm(&{
            let mut rng = ChaCha8Rng::seed_from_u64(6);
            let h = random_hermitian(&mut rng, 4);
            h.scale(I)
        });
        let b = u.matmul(&a).matmul(&u.dagger());
        let es = eig_hermitian(&b).unwrap();
        assert!(es.orthonormality_residual() < 1e-10);
        assert!(es.max_residual(&b) < 1e-10);
        assert!((es.values[0] + 1.0).abs() < 1e-10);
    }

    #[test]
    fn expm_basic_cases() {
        let z = expm(&ComplexMatrix::zeros(4, 4));
        assert_eq!(z.dist(&ComplexMatrix::identity(4)), 0.0);
        let d = expm(&ComplexMatrix::diag(&[c(0.0, std::f64::consts::PI), ZERO]));
        assert!(d.dist(&ComplexMatrix::diag_real(&[-1.0, 1.0])) < 1e-14);
    }

    #[test]
    fn expm_rotation_block() {
        // ζ(|0><1|) − ζ*(|1><0|) with real ζ = α/2 is a rotation by α/2 in the
        // (0, 1) plane.
        let alpha = 1.234_f64;
        let zeta = c(alpha / 2.0, 0.0);
        let gen = &ComplexMatrix::unit(2, 0, 1).scale(zeta) - &ComplexMatrix::unit(2, 1, 0).scale(zeta.conj());
        let e = expm(&gen);
        let (s, co) = (alpha / 2.0).sin_cos();
        let expected = ComplexMatrix::from_real_rows(&[vec![co, s], vec![-s, co]]).unwrap();
        assert!(e.dist(&expected) < 1e-12);
        for j in 0..2 {
            assert!((norm(&e.column(j)) - 1.0).abs() < 1e-12);
        }
        let det = e[(0, 0)] * e[(1, 1)] - e[(0, 1)] * e[(1, 0)];
        assert!((det.norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn expm_matches_spectral_route() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let h = random_hermitian(&mut rng, 9).scale_real(2.0);
            let es = eig_hermitian(&h).unwrap();
            let mut spectral = ComplexMatrix::zeros(9, 9);
            for (&l, v) in es.values.iter().zip(&es.vectors) {
                spectral = &spectral + &ComplexMatrix::outer(v, v).scale(c(0.0, l).exp());
            }
            let e = expm(&h.scale(I));
            assert!(e.dist(&spectral) < 1e-12 * 3.0, "{}", e.dist(&spectral));
        }
    }

    #[test]
    fn random_unitaries_are_unitary() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for _ in 0..20 {
            let h = random_hermitian(&mut rng, 9);
            let u = expm(&h.scale(I));
            assert!(u.unitarity_residual() < 1e-12);
        }
    }

    #[test]
    fn partial_transpose_product_state_real_factor() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let ra = ComplexMatrix::from_fn(3, 3, |_, _| c(rng.gen_range(0.0..1.0), 0.0));
        let ra = (&ra + &ra.transpose()).scale_real(0.5);
        let rb = random_hermitian(&mut rng, 3);
        let rho = kron(&ra, &rb);
        let pt = partial_transpose(&rho, Subsystem::A).unwrap();
        assert_eq!(pt.dist(&rho), 0.0);
    }

    #[test]
    fn partial_transpose_involution_trace_hermiticity() {
        let mut rng = ChaCha8Rng::seed_from_u64(10);
        let rho = random_hermitian(&mut rng, 9);
        for s in [Subsystem::A, Subsystem::B] {
            let pt = partial_transpose(&rho, s).unwrap();
            assert_eq!(partial_transpose(&pt, s).unwrap(), rho);
            assert_eq!(pt.trace(), rho.trace());
            assert!(pt.is_hermitian(0.0));
        }
    }

    #[test]
    fn partial_transpose_bad_shape() {
        let r = ComplexMatrix::identity(4);
        assert!(matches!(
            partial_transpose(&r, Subsystem::A),
            Err(Error::BadShape { .. })
        ));
    }

    #[test]
    fn maximally_entangled_partial_transpose() {
        let s = 1.0 / 3f64.sqrt();
        let mut psi = vec![ZERO; 9];
        for i in 0..3 {
            psi[4 * i] = c(s, 0.0);
        }
        let rho = ComplexMatrix::outer(&psi, &psi);
        let pt = partial_transpose(&rho, Subsystem::A).unwrap();
        let es = eig_hermitian(&pt).unwrap();
        assert!((es.values[0] + 1.0 / 3.0).abs() < 1e-12);
        assert!((trace_norm_hermitian(&pt).unwrap() - 3.0).abs() < 1e-12);
    }

    #[test]
    fn trace_norm_simple() {
        assert!((trace_norm_hermitian(&ComplexMatrix::identity(9)).unwrap() - 9.0).abs() < 1e-14);
        assert!((trace_norm_hermitian(&ComplexMatrix::diag_real(&[1.0, -2.0])).unwrap() - 3.0).abs() < 1e-14);
        assert!(trace_norm_hermitian(&ComplexMatrix::unit(2, 0, 1)).is_err());
    }

    #[test]
    fn from_vec_checks_length() {
        assert!(ComplexMatrix::from_vec(2, 2, vec![ZERO; 3]).is_err());
        assert!(ComplexMatrix::from_vec(2, 2, vec![ZERO; 4]).is_ok());
    }
}
