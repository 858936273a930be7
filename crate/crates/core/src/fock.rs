//! Exact fermionic occupation-number algebra on a handful of modes.
//!
//! A [`ModeRegister`] fixes an ordered set of mode labels. Basis states are
//! bitmasks over the register slots (bit `p` holds the occupation of slot
//! `p`), and creation/annihilation operators are dense matrices carrying the
//! Jordan-Wigner parity string. Dimensions never exceed 2⁴ here, so the
//! dense representation doubles as a brute-force oracle for every analytic
//! identity built on top of it.

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{anticommutator, CMatrix};
use crate::scalar::Scalar;

/// Ordered list of fermionic mode labels.
///
/// Two orderings live here:
/// * the **slot order** (the order labels were given in), which defines the
///   occupation bitmask and is immutable after construction;
/// * the **string order**, which defines the Jordan-Wigner parity: a creator
///   on mode `p` picks up (−1)^(number of occupied modes preceding `p` in
///   string order).
///
/// [`ModeRegister::new`] makes both orders coincide. The canonical Rindler
/// register pairs the wedges differently; see
/// [`crate::unruh::rindler_register`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModeRegister {
    labels: Vec<String>,
    string_rank: Vec<usize>,
}

impl ModeRegister {
    /// Register whose Jordan-Wigner string runs left-to-right in slot order.
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let rank = (0..labels.len()).collect();
        Self::build(labels, rank)
    }

    /// Register with an explicit Jordan-Wigner string order.
    ///
    /// `string_order[k]` is the slot that comes k-th in the string; it must
    /// be a permutation of the slot indices.
    pub fn with_string_order<I, S>(labels: I, string_order: &[usize]) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let n = labels.len();
        let mut rank = vec![usize::MAX; n];
        if string_order.len() != n {
            return Err(Error::InvalidStringOrder(n));
        }
        for (k, &slot) in string_order.iter().enumerate() {
            if slot >= n || rank[slot] != usize::MAX {
                return Err(Error::InvalidStringOrder(n));
            }
            rank[slot] = k;
        }
        Self::build(labels, rank)
    }

    fn build(labels: Vec<String>, string_rank: Vec<usize>) -> Result<Self> {
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::DuplicateModeLabel(l.clone()));
            }
        }
        Ok(ModeRegister {
            labels,
            string_rank,
        })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Hilbert-space dimension, 2^len.
    pub fn dim(&self) -> usize {
        1 << self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Slot of a mode label.
    pub fn position(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownMode(label.to_string()))
    }

    /// Jordan-Wigner rank per slot.
    pub fn string_rank(&self) -> &[usize] {
        &self.string_rank
    }

    /// Bitmask of slots that precede `slot` in the Jordan-Wigner string.
    fn parity_mask(&self, slot: usize) -> usize {
        let mut mask = 0usize;
        for q in 0..self.labels.len() {
            if q != slot && self.string_rank[q] < self.string_rank[slot] {
                mask |= 1 << q;
            }
        }
        mask
    }
}

/// Index of an occupation pattern: bit `p` of the result is `occupations[p]`.
pub fn basis_index(register: &ModeRegister, occupations: &[bool]) -> Result<usize> {
    if occupations.len() != register.len() {
        return Err(Error::OccupationLength {
            expected: register.len(),
            got: occupations.len(),
        });
    }
    Ok(occupations
        .iter()
        .enumerate()
        .fold(0, |acc, (p, &occ)| acc | ((occ as usize) << p)))
}

/// Inverse of [`basis_index`].
pub fn basis_occupations(register: &ModeRegister, index: usize) -> Result<Vec<bool>> {
    if index >= register.dim() {
        return Err(Error::IndexOutOfRange {
            index,
            modes: register.len(),
        });
    }
    Ok((0..register.len()).map(|p| (index >> p) & 1 == 1).collect())
}

/// Complex amplitude table over the occupation basis of a register.
#[derive(Clone, Debug, PartialEq)]
pub struct StateVector<T> {
    register: ModeRegister,
    amplitudes: Vec<Complex<T>>,
}

impl<T: Scalar> StateVector<T> {
    pub fn zero(register: ModeRegister) -> Self {
        let dim = register.dim();
        StateVector {
            register,
            amplitudes: vec![Complex::zero(); dim],
        }
    }

    /// Basis ket |occupations⟩ given by its index.
    pub fn basis_state(register: ModeRegister, index: usize) -> Result<Self> {
        if index >= register.dim() {
            return Err(Error::IndexOutOfRange {
                index,
                modes: register.len(),
            });
        }
        let mut v = Self::zero(register);
        v.amplitudes[index] = Complex::one();
        Ok(v)
    }

    pub fn from_amplitudes(register: ModeRegister, amplitudes: Vec<Complex<T>>) -> Result<Self> {
        if amplitudes.len() != register.dim() {
            return Err(Error::AmplitudeLength {
                expected: register.dim(),
                got: amplitudes.len(),
            });
        }
        Ok(StateVector {
            register,
            amplitudes,
        })
    }

    pub fn register(&self) -> &ModeRegister {
        &self.register
    }

    pub fn amplitudes(&self) -> &[Complex<T>] {
        &self.amplitudes
    }

    pub fn amplitude(&self, index: usize) -> Complex<T> {
        self.amplitudes[index]
    }

    pub fn norm_sqr(&self) -> T {
        self.amplitudes
            .iter()
            .map(|a| a.norm_sqr())
            .fold(T::zero(), |a, b| a + b)
    }

    pub fn norm(&self) -> T {
        self.norm_sqr().sqrt()
    }

    /// Whether the squared norm is 1 within `tol`; unnormalized
    /// intermediates are allowed but should be flagged with this.
    pub fn is_normalized(&self, tol: T) -> bool {
        (self.norm_sqr() - T::one()).abs() <= tol
    }

    /// ⟨self|other⟩.
    pub fn dot(&self, other: &Self) -> Result<Complex<T>> {
        if self.register != other.register {
            return Err(Error::RegisterMismatch);
        }
        Ok(self
            .amplitudes
            .iter()
            .zip(other.amplitudes.iter())
            .fold(Complex::zero(), |acc, (a, b)| acc + a.conj() * *b))
    }

    pub fn scaled(&self, factor: Complex<T>) -> Self {
        StateVector {
            register: self.register.clone(),
            amplitudes: self.amplitudes.iter().map(|&a| a * factor).collect(),
        }
    }

    pub fn max_abs_diff(&self, other: &Self) -> Result<T> {
        if self.register != other.register {
            return Err(Error::RegisterMismatch);
        }
        Ok(self
            .amplitudes
            .iter()
            .zip(other.amplitudes.iter())
            .map(|(a, b)| (*a - *b).norm())
            .fold(T::zero(), T::max))
    }
}

/// Dense operator on the occupation basis of a register.
#[derive(Clone, Debug, PartialEq)]
pub struct OperatorMatrix<T> {
    register: ModeRegister,
    matrix: CMatrix<T>,
}

impl<T: Scalar> OperatorMatrix<T> {
    pub fn identity(register: ModeRegister) -> Self {
        let dim = register.dim();
        OperatorMatrix {
            register,
            matrix: CMatrix::identity(dim),
        }
    }

    pub fn from_matrix(register: ModeRegister, matrix: CMatrix<T>) -> Result<Self> {
        if matrix.dim() != register.dim() {
            return Err(Error::DimensionMismatch {
                expected: register.dim(),
                got: matrix.dim(),
            });
        }
        Ok(OperatorMatrix { register, matrix })
    }

    pub fn register(&self) -> &ModeRegister {
        &self.register
    }

    pub fn matrix(&self) -> &CMatrix<T> {
        &self.matrix
    }

    pub fn adjoint(&self) -> Self {
        OperatorMatrix {
            register: self.register.clone(),
            matrix: self.matrix.adjoint(),
        }
    }

    pub fn scale(&self, factor: Complex<T>) -> Self {
        OperatorMatrix {
            register: self.register.clone(),
            matrix: self.matrix.scale(factor),
        }
    }

    /// {self, other}; panics on register mismatch (programming error).
    pub fn anticommutator(&self, other: &Self) -> Self {
        assert_eq!(self.register, other.register, "register mismatch");
        OperatorMatrix {
            register: self.register.clone(),
            matrix: anticommutator(&self.matrix, &other.matrix),
        }
    }

    pub fn max_abs_diff(&self, other: &Self) -> T {
        assert_eq!(self.register, other.register, "register mismatch");
        self.matrix.max_abs_diff(&other.matrix)
    }
}

impl<T: Scalar> std::ops::Mul for &OperatorMatrix<T> {
    type Output = OperatorMatrix<T>;
    fn mul(self, rhs: &OperatorMatrix<T>) -> OperatorMatrix<T> {
        assert_eq!(self.register, rhs.register, "register mismatch");
        OperatorMatrix {
            register: self.register.clone(),
            matrix: &self.matrix * &rhs.matrix,
        }
    }
}

impl<T: Scalar> std::ops::Add for &OperatorMatrix<T> {
    type Output = OperatorMatrix<T>;
    fn add(self, rhs: &OperatorMatrix<T>) -> OperatorMatrix<T> {
        assert_eq!(self.register, rhs.register, "register mismatch");
        OperatorMatrix {
            register: self.register.clone(),
            matrix: &self.matrix + &rhs.matrix,
        }
    }
}

impl<T: Scalar> std::ops::Sub for &OperatorMatrix<T> {
    type Output = OperatorMatrix<T>;
    fn sub(self, rhs: &OperatorMatrix<T>) -> OperatorMatrix<T> {
        assert_eq!(self.register, rhs.register, "register mismatch");
        OperatorMatrix {
            register: self.register.clone(),
            matrix: &self.matrix - &rhs.matrix,
        }
    }
}

/// Matrix of the creation operator c†_p.
///
/// Acting on a basis state: zero if mode `p` is occupied, otherwise the
/// flipped state times the Jordan-Wigner parity (−1)^(occupied modes
/// preceding `p` in the register's string order).
pub fn creation_matrix<T: Scalar>(
    register: &ModeRegister,
    mode: &str,
) -> Result<OperatorMatrix<T>> {
    let slot = register.position(mode)?;
    let mask = register.parity_mask(slot);
    let bit = 1usize << slot;
    let mut m = CMatrix::zeros(register.dim());
    for b in 0..register.dim() {
        if b & bit != 0 {
            continue;
        }
        let sign = if (b & mask).count_ones().is_multiple_of(2) {
            T::one()
        } else {
            -T::one()
        };
        m[(b | bit, b)] = Complex::new(sign, T::zero());
    }
    Ok(OperatorMatrix {
        register: register.clone(),
        matrix: m,
    })
}

/// Matrix of the annihilation operator c_p: the conjugate transpose of
/// [`creation_matrix`].
pub fn annihilation_matrix<T: Scalar>(
    register: &ModeRegister,
    mode: &str,
) -> Result<OperatorMatrix<T>> {
    Ok(creation_matrix(register, mode)?.adjoint())
}

/// Matrix-vector product; no implicit renormalization.
pub fn apply<T: Scalar>(op: &OperatorMatrix<T>, v: &StateVector<T>) -> Result<StateVector<T>> {
    if op.register != *v.register() {
        return Err(Error::RegisterMismatch);
    }
    Ok(StateVector {
        register: v.register().clone(),
        amplitudes: op.matrix.matvec(v.amplitudes()),
    })
}
