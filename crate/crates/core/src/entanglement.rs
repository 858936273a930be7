//! Reduction pipeline: partial trace, partial transpose, Hermitian
//! eigenvalues, negativity — plus the closed-form negativities, vanishing
//! points and thresholds for the species-entangled state.
//!
//! The bipartitions pair Alice with wedge I (Rob) or wedge II (AntiRob);
//! a detector filter optionally restricts the kept wedge to its particle or
//! antiparticle mode. Negativity is the magnitude of the sum of negative
//! eigenvalues of the partially transposed reduced density matrix;
//! eigenvalues above −1e-12 count as numerical zeros.

use num_complex::Complex;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{hermitian_eigenvalues_unchecked, CMatrix};
use crate::scalar::{real, Scalar};
use crate::states::{entangled_state, CompositeState, StateKind};
use crate::unruh::UnruhParams;

/// Eigenvalues in [−1e-12, 0] are treated as zeros by [`negativity`].
pub const NEGATIVE_EIGENVALUE_CUTOFF: f64 = 1e-12;

/// Hermiticity defect accepted by [`hermitian_eigenvalues`].
pub const HERMITICITY_TOLERANCE: f64 = 1e-10;

/// Which observer keeps the non-Alice side.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ObserverPair {
    /// Alice with the wedge-I modes (I⁺, I⁻).
    AliceRob,
    /// Alice with the wedge-II modes (II⁺, II⁻).
    AliceAntiRob,
}

/// Detector restriction on the kept wedge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Detector {
    /// Both particle and antiparticle modes are kept.
    Full,
    /// Only the particle mode is kept; the antiparticle mode is traced out.
    ParticleOnly,
    /// Only the antiparticle mode is kept; the particle mode is traced out.
    AntiparticleOnly,
}

/// Which tensor factor the partial transpose acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TransposeSide {
    Alice,
    Other,
}

/// Full description of a reduction: who keeps what, and which side is
/// transposed when computing negativity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PartitionSpec {
    pub pair: ObserverPair,
    pub detector: Detector,
    pub transpose: TransposeSide,
}

impl PartitionSpec {
    pub fn new(pair: ObserverPair, detector: Detector) -> Self {
        PartitionSpec {
            pair,
            detector,
            transpose: TransposeSide::Alice,
        }
    }

    /// Slots of the Rindler register kept by this partition, in slot order.
    pub fn kept_slots(&self) -> Vec<usize> {
        let (particle, antiparticle) = match self.pair {
            ObserverPair::AliceRob => (0usize, 1usize),
            ObserverPair::AliceAntiRob => (2, 3),
        };
        match self.detector {
            Detector::Full => vec![particle, antiparticle],
            Detector::ParticleOnly => vec![particle],
            Detector::AntiparticleOnly => vec![antiparticle],
        }
    }
}

/// Hermitian, trace-one matrix tagged with its tensor-factor dimensions.
///
/// Row-major over the factors: the first factor (Alice) is the most
/// significant index. For the full detector the basis reads |a j k⟩ =
/// a·4 + j·2 + k with j the particle and k the antiparticle occupation of
/// the kept wedge.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityMatrix<T> {
    dims: Vec<usize>,
    matrix: CMatrix<T>,
}

impl<T: Scalar> DensityMatrix<T> {
    pub fn from_parts(dims: Vec<usize>, matrix: CMatrix<T>) -> Result<Self> {
        let expected: usize = dims.iter().product();
        if matrix.dim() != expected {
            return Err(Error::DimensionMismatch {
                expected,
                got: matrix.dim(),
            });
        }
        Ok(DensityMatrix { dims, matrix })
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn matrix(&self) -> &CMatrix<T> {
        &self.matrix
    }

    pub fn trace(&self) -> Complex<T> {
        self.matrix.trace()
    }

    /// Checks Hermiticity, unit trace and positivity (eigenvalues ≥ −1e-10).
    pub fn validate(&self) -> Result<()> {
        let defect = self.matrix.hermiticity_defect();
        if defect > real(1e-12) {
            return Err(Error::NotHermitian {
                defect: defect.to_f64().unwrap_or(f64::NAN),
            });
        }
        let trace = self.trace();
        if (trace.re - T::one()).abs() > real(1e-12) || trace.im.abs() > real(1e-12) {
            return Err(Error::OutOfRange {
                what: "trace",
                value: trace.re.to_f64().unwrap_or(f64::NAN),
            });
        }
        let min = hermitian_eigenvalues_unchecked(&self.matrix)[0];
        if min < real::<T>(-1e-10) {
            return Err(Error::OutOfRange {
                what: "minimum eigenvalue",
                value: min.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(())
    }

    pub fn max_abs_diff(&self, other: &Self) -> T {
        self.matrix.max_abs_diff(&other.matrix)
    }
}

/// Reduced density matrix of a composite state on Alice ⊗ kept modes.
///
/// Basis order is |alice⟩ ⊗ kept slots in slot order (particle before
/// antiparticle). The traced slots are summed out directly in the
/// occupation basis.
pub fn reduce<T: Scalar>(state: &CompositeState<T>, spec: &PartitionSpec) -> DensityMatrix<T> {
    let kept = spec.kept_slots();
    let traced_mask: usize = (0..4).filter(|s| !kept.contains(s)).map(|s| 1 << s).sum();
    let dim = 1usize << (kept.len() + 1);
    let mut rho = CMatrix::zeros(dim);
    let amp = state.amplitudes();
    let index_of = |a: usize, bits: usize| -> usize {
        kept.iter()
            .fold(a, |acc, &slot| (acc << 1) | ((bits >> slot) & 1))
    };
    for a in 0..2usize {
        for b in 0..16usize {
            let left = amp[a * 16 + b];
            if left.is_zero() {
                continue;
            }
            for a2 in 0..2usize {
                for b2 in 0..16usize {
                    if (b ^ b2) & traced_mask != 0 {
                        continue;
                    }
                    let right = amp[a2 * 16 + b2];
                    if right.is_zero() {
                        continue;
                    }
                    let row = index_of(a, b);
                    let col = index_of(a2, b2);
                    rho[(row, col)] += left * right.conj();
                }
            }
        }
    }
    let mut dims = vec![2usize];
    dims.extend(std::iter::repeat_n(2, kept.len()));
    DensityMatrix { dims, matrix: rho }
}

/// Transpose of the chosen tensor factor's indices. Alice is factor 0; the
/// `Other` side is the whole kept block. The result is Hermitian whenever
/// the input is.
pub fn partial_transpose<T: Scalar>(rho: &DensityMatrix<T>, side: TransposeSide) -> CMatrix<T> {
    let block = rho.dim() / rho.dims[0];
    let mut out = CMatrix::zeros(rho.dim());
    for a in 0..rho.dims[0] {
        for a2 in 0..rho.dims[0] {
            for x in 0..block {
                for x2 in 0..block {
                    let (row, col) = (a * block + x, a2 * block + x2);
                    let src = match side {
                        TransposeSide::Alice => (a2 * block + x, a * block + x2),
                        TransposeSide::Other => (a * block + x2, a2 * block + x),
                    };
                    out[(row, col)] = rho.matrix[src];
                }
            }
        }
    }
    out
}

/// Eigenvalues of a Hermitian matrix, ascending; rejects matrices whose
/// hermiticity defect exceeds 1e-10.
pub fn hermitian_eigenvalues<T: Scalar>(m: &CMatrix<T>) -> Result<Vec<T>> {
    let defect = m.hermiticity_defect();
    if defect > real(HERMITICITY_TOLERANCE) {
        return Err(Error::NotHermitian {
            defect: defect.to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok(hermitian_eigenvalues_unchecked(m))
}

/// Magnitude of the sum of strictly negative eigenvalues of the partial
/// transpose. Zero for every separable state; 1/2 for a two-qubit Bell
/// state.
pub fn negativity<T: Scalar>(rho: &DensityMatrix<T>, side: TransposeSide) -> T {
    let pt = partial_transpose(rho, side);
    let cutoff = real::<T>(-NEGATIVE_EIGENVALUE_CUTOFF);
    hermitian_eigenvalues_unchecked(&pt)
        .into_iter()
        .filter(|&ev| ev < cutoff)
        .fold(T::zero(), |acc, ev| acc + ev)
        .abs()
}

/// Whole pipeline for one (state, pair, detector) triple.
pub fn negativity_of<T: Scalar>(
    kind: StateKind,
    params: &UnruhParams<T>,
    pair: ObserverPair,
    detector: Detector,
) -> T {
    let state = entangled_state(kind, params);
    let spec = PartitionSpec::new(pair, detector);
    negativity(&reduce(&state, &spec), spec.transpose)
}

/// Closed-form negativity of the species-entangled state:
/// ½ | |q_R|² cos²r − |q_L|² sin²r | for Alice–Rob and
/// ½ | |q_L|² cos²r − |q_R|² sin²r | for Alice–AntiRob.
pub fn analytic_negativity_psi1<T: Scalar>(params: &UnruhParams<T>, pair: ObserverPair) -> T {
    let c2 = params.r().cos().powi(2);
    let s2 = params.r().sin().powi(2);
    let (w_c, w_s) = match pair {
        ObserverPair::AliceRob => (params.q_right().norm_sqr(), params.q_left().norm_sqr()),
        ObserverPair::AliceAntiRob => (params.q_left().norm_sqr(), params.q_right().norm_sqr()),
    };
    let half = (T::one() + T::one()).recip();
    half * (w_c * c2 - w_s * s2).abs()
}

/// Acceleration parameter at which the Alice–AntiRob negativity of the
/// species-entangled state vanishes: tan²r = 1/|q_R|² − 1. `None` when
/// |q_R|² < 1/2 would push the root past π/4.
pub fn psi1_vanishing_r<T: Scalar>(params: &UnruhParams<T>) -> Option<T> {
    let x = params.q_right().norm_sqr();
    let half = (T::one() + T::one()).recip();
    if x < half {
        return None;
    }
    Some((x.recip() - T::one()).max(T::zero()).sqrt().atan())
}

/// Acceleration parameter above which entanglement starts flowing into the
/// antiparticle sector of Alice–Rob: cos²r = |q_L|²/|q_R|².
///
/// `None` when |q_R|² > 2/3 (cos²r never drops below 1/2, so the sector
/// stays empty for every acceleration); `Some(0)` when |q_R|² < 1/2 (the
/// sector is active from the start).
pub fn antiparticle_transfer_threshold<T: Scalar>(params: &UnruhParams<T>) -> Option<T> {
    let x = params.q_right().norm_sqr();
    let one = T::one();
    let two = one + one;
    let three = two + one;
    if x > two / three {
        return None;
    }
    if x < one / two {
        return Some(T::zero());
    }
    let ratio = ((one - x) / x).sqrt().min(one);
    Some(ratio.acos())
}

/// The six negativity equalities relating the occupation-entangled states:
/// swapping the excitation species swaps the roles of the particle and
/// antiparticle detectors and preserves the full-detector values.
pub const SYMMETRY_LABELS: [&str; 6] = [
    "N+(AR, particle) = N-(AR, antiparticle)",
    "N+(ARbar, particle) = N-(ARbar, antiparticle)",
    "N+(AR, antiparticle) = N-(AR, particle)",
    "N+(ARbar, antiparticle) = N-(ARbar, particle)",
    "N+(AR, full) = N-(AR, full)",
    "N+(ARbar, full) = N-(ARbar, full)",
];

/// Absolute differences of the six equalities in [`SYMMETRY_LABELS`],
/// computed from all twelve sector negativities at the given parameters.
pub fn symmetry_check_psi_plus_minus<T: Scalar>(params: &UnruhParams<T>) -> [T; 6] {
    use Detector::*;
    use ObserverPair::*;
    use StateKind::*;
    let n = |kind, pair, det| negativity_of(kind, params, pair, det);
    [
        (n(PsiPlus, AliceRob, ParticleOnly) - n(PsiMinus, AliceRob, AntiparticleOnly)).abs(),
        (n(PsiPlus, AliceAntiRob, ParticleOnly) - n(PsiMinus, AliceAntiRob, AntiparticleOnly))
            .abs(),
        (n(PsiPlus, AliceRob, AntiparticleOnly) - n(PsiMinus, AliceRob, ParticleOnly)).abs(),
        (n(PsiPlus, AliceAntiRob, AntiparticleOnly) - n(PsiMinus, AliceAntiRob, ParticleOnly))
            .abs(),
        (n(PsiPlus, AliceRob, Full) - n(PsiMinus, AliceRob, Full)).abs(),
        (n(PsiPlus, AliceAntiRob, Full) - n(PsiMinus, AliceAntiRob, Full)).abs(),
    ]
}
