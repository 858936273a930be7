//! Dense complex matrices and a Hermitian eigensolver.
//!
//! Everything in this crate lives on Hilbert spaces of dimension 32 or less,
//! so the matrices are plain row-major `Vec`s and the eigensolver is a cyclic
//! Jacobi iteration with complex rotations.

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::scalar::Scalar;

/// Square complex matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct CMatrix<T> {
    dim: usize,
    data: Vec<Complex<T>>,
}

impl<T: Scalar> CMatrix<T> {
    pub fn zeros(dim: usize) -> Self {
        CMatrix {
            dim,
            data: vec![Complex::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = Complex::one();
        }
        m
    }

    pub fn from_rows(rows: &[&[Complex<T>]]) -> Self {
        let dim = rows.len();
        let mut m = Self::zeros(dim);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), dim, "rows must form a square matrix");
            for (j, &v) in row.iter().enumerate() {
                m[(i, j)] = v;
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let mut out = Self::zeros(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                out[(j, i)] = self[(i, j)].conj();
            }
        }
        out
    }

    pub fn scale(&self, factor: Complex<T>) -> Self {
        CMatrix {
            dim: self.dim,
            data: self.data.iter().map(|&v| v * factor).collect(),
        }
    }

    pub fn matvec(&self, v: &[Complex<T>]) -> Vec<Complex<T>> {
        assert_eq!(v.len(), self.dim, "vector length must match dimension");
        let mut out = vec![Complex::zero(); self.dim];
        for i in 0..self.dim {
            let mut acc = Complex::zero();
            for j in 0..self.dim {
                acc += self[(i, j)] * v[j];
            }
            out[i] = acc;
        }
        out
    }

    pub fn trace(&self) -> Complex<T> {
        (0..self.dim).fold(Complex::zero(), |acc, i| acc + self[(i, i)])
    }

    /// Largest entry magnitude.
    pub fn max_abs(&self) -> T {
        self.data.iter().map(|v| v.norm()).fold(T::zero(), T::max)
    }

    pub fn max_abs_diff(&self, other: &Self) -> T {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        self.data
            .iter()
            .zip(other.data.iter())
            .map(|(a, b)| (*a - *b).norm())
            .fold(T::zero(), T::max)
    }

    /// Max |a_ij - conj(a_ji)| over all entries.
    pub fn hermiticity_defect(&self) -> T {
        let mut worst = T::zero();
        for i in 0..self.dim {
            for j in i..self.dim {
                let d = (self[(i, j)] - self[(j, i)].conj()).norm();
                worst = worst.max(d);
            }
        }
        worst
    }

    fn frobenius(&self) -> T {
        self.data
            .iter()
            .map(|v| v.norm_sqr())
            .fold(T::zero(), |a, b| a + b)
            .sqrt()
    }
}

impl<T> std::ops::Index<(usize, usize)> for CMatrix<T> {
    type Output = Complex<T>;
    fn index(&self, (i, j): (usize, usize)) -> &Complex<T> {
        &self.data[i * self.dim + j]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for CMatrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex<T> {
        &mut self.data[i * self.dim + j]
    }
}

impl<T: Scalar> std::ops::Mul for &CMatrix<T> {
    type Output = CMatrix<T>;
    fn mul(self, rhs: &CMatrix<T>) -> CMatrix<T> {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let mut out = CMatrix::zeros(self.dim);
        for i in 0..self.dim {
            for k in 0..self.dim {
                let a = self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..self.dim {
                    out[(i, j)] += a * rhs[(k, j)];
                }
            }
        }
        out
    }
}

impl<T: Scalar> std::ops::Add for &CMatrix<T> {
    type Output = CMatrix<T>;
    fn add(self, rhs: &CMatrix<T>) -> CMatrix<T> {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        CMatrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(rhs.data.iter())
                .map(|(&a, &b)| a + b)
                .collect(),
        }
    }
}

impl<T: Scalar> std::ops::Sub for &CMatrix<T> {
    type Output = CMatrix<T>;
    fn sub(self, rhs: &CMatrix<T>) -> CMatrix<T> {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        CMatrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(rhs.data.iter())
                .map(|(&a, &b)| a - b)
                .collect(),
        }
    }
}

/// {A, B} = AB + BA.
pub fn anticommutator<T: Scalar>(a: &CMatrix<T>, b: &CMatrix<T>) -> CMatrix<T> {
    &(a * b) + &(b * a)
}

/// Eigenvalues of a Hermitian matrix, ascending.
///
/// Cyclic Jacobi with complex Givens rotations; converges to machine
/// precision in a handful of sweeps at these dimensions. The caller is
/// responsible for Hermiticity.
pub fn hermitian_eigenvalues_unchecked<T: Scalar>(m: &CMatrix<T>) -> Vec<T> {
    let n = m.dim();
    let mut a = m.clone();
    let scale = a.frobenius();
    if n > 1 && scale > T::zero() {
        let tol = scale * T::epsilon();
        for _sweep in 0..60 {
            let mut off = T::zero();
            for p in 0..n {
                for q in (p + 1)..n {
                    off += a[(p, q)].norm_sqr();
                }
            }
            if off.sqrt() <= tol {
                break;
            }
            for p in 0..n {
                for q in (p + 1)..n {
                    rotate(&mut a, p, q, tol);
                }
            }
        }
    }
    let mut eigs: Vec<T> = (0..n).map(|i| a[(i, i)].re).collect();
    eigs.sort_by(|x, y| x.partial_cmp(y).expect("eigenvalues are finite"));
    eigs
}

/// One Jacobi rotation zeroing the (p, q) entry of a Hermitian matrix.
fn rotate<T: Scalar>(a: &mut CMatrix<T>, p: usize, q: usize, tol: T) {
    let apq = a[(p, q)];
    let r = apq.norm();
    if r <= tol {
        return;
    }
    // phase w makes the pivot real; then a real rotation angle is chosen
    let w = apq / r;
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    let two = T::one() + T::one();
    let tau = (aqq - app) / (two * r);
    let t = if tau >= T::zero() {
        T::one() / (tau + (T::one() + tau * tau).sqrt())
    } else {
        -T::one() / (-tau + (T::one() + tau * tau).sqrt())
    };
    let c = T::one() / (T::one() + t * t).sqrt();
    let s = t * c;

    // unitary J: J[p][p]=c, J[p][q]=s, J[q][p]=-s*conj(w), J[q][q]=c*conj(w)
    let n = a.dim();
    let sc = Complex::new(s, T::zero());
    let cc = Complex::new(c, T::zero());
    for k in 0..n {
        if k == p || k == q {
            continue;
        }
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        let new_kp = akp * cc - akq * w.conj() * sc;
        let new_kq = akp * sc + akq * w.conj() * cc;
        a[(k, p)] = new_kp;
        a[(k, q)] = new_kq;
        a[(p, k)] = new_kp.conj();
        a[(q, k)] = new_kq.conj();
    }
    let app_new = app - t * r;
    let aqq_new = aqq + t * r;
    a[(p, p)] = Complex::new(app_new, T::zero());
    a[(q, q)] = Complex::new(aqq_new, T::zero());
    a[(p, q)] = Complex::zero();
    a[(q, p)] = Complex::zero();
}
