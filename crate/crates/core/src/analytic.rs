//! Closed-form reduced density matrices and partial-transpose blocks for the
//! occupation-entangled state, written out entry by entry.
//!
//! These are an independent route to the same objects the reduction pipeline
//! produces: [`crate::entanglement::reduce`] builds them by tracing the
//! 32-amplitude state, while everything here is hard-coded in terms of
//! C = cos r, S = sin r and the weights (q_R, q_L). The two routes are
//! compared entrywise in tests and in the CLI self-verification.

use num_complex::Complex;

use crate::entanglement::{DensityMatrix, NEGATIVE_EIGENVALUE_CUTOFF};
use crate::entanglement::{Detector, ObserverPair};
use crate::linalg::{hermitian_eigenvalues_unchecked, CMatrix};
use crate::scalar::{real, Scalar};
use crate::unruh::UnruhParams;

struct Trig<T> {
    c: T,
    s: T,
    q_r: Complex<T>,
    q_l: Complex<T>,
    w_r: T,
    w_l: T,
}

fn trig<T: Scalar>(params: &UnruhParams<T>) -> Trig<T> {
    Trig {
        c: params.r().cos(),
        s: params.r().sin(),
        q_r: params.q_right(),
        q_l: params.q_left(),
        w_r: params.q_right().norm_sqr(),
        w_l: params.q_left().norm_sqr(),
    }
}

fn re<T: Scalar>(x: T) -> Complex<T> {
    Complex::new(x, T::zero())
}

/// Builds a Hermitian matrix from its diagonal and strictly-upper entries.
fn hermitian<T: Scalar>(
    dim: usize,
    entries: &[(usize, usize, Complex<T>)],
    scale: T,
) -> CMatrix<T> {
    let mut m = CMatrix::zeros(dim);
    for &(i, j, v) in entries {
        m[(i, j)] += v * scale;
        if i != j {
            m[(j, i)] += (v * scale).conj();
        }
    }
    m
}

/// Reduced density matrix of the occupation-entangled state with a particle
/// excitation, for any pair/detector combination, in the basis
/// |alice, particle, antiparticle⟩ (full detector) or |alice, kept mode⟩.
pub fn psi_plus_reduced<T: Scalar>(
    params: &UnruhParams<T>,
    pair: ObserverPair,
    detector: Detector,
) -> DensityMatrix<T> {
    let t = trig(params);
    let half = (T::one() + T::one()).recip();
    let m = match (pair, detector) {
        (ObserverPair::AliceRob, Detector::Full) => alice_rob_full(&t, half),
        (ObserverPair::AliceAntiRob, Detector::Full) => alice_antirob_full(&t, half),
        (pair, detector) => sector_matrix(&t, half, pair, detector),
    };
    let n_factors = if detector == Detector::Full { 3 } else { 2 };
    DensityMatrix::from_parts(vec![2; n_factors], m).expect("square by construction")
}

/// ρ⁺_AR: ½[C⁴|000⟩⟨000| + S²C²(|010⟩⟨010| + |001⟩⟨001|) + S⁴|011⟩⟨011| +
/// |q_R|²(C²|110⟩⟨110| + S²|111⟩⟨111|) + |q_L|²(S²|110⟩⟨110| + C²|100⟩⟨100|) +
/// q_R*(C³|000⟩⟨110| + S²C|001⟩⟨111|) − q_L*(C²S|001⟩⟨100| + S³|011⟩⟨110|) −
/// q_R q_L* SC|111⟩⟨100|] + h.c. of the off-diagonal part.
fn alice_rob_full<T: Scalar>(t: &Trig<T>, half: T) -> CMatrix<T> {
    let (c, s) = (t.c, t.s);
    let c2 = c * c;
    let s2 = s * s;
    hermitian(
        8,
        &[
            (0b000, 0b000, re(c2 * c2)),
            (0b001, 0b001, re(s2 * c2)),
            (0b010, 0b010, re(s2 * c2)),
            (0b011, 0b011, re(s2 * s2)),
            (0b100, 0b100, re(t.w_l * c2)),
            (0b110, 0b110, re(t.w_r * c2 + t.w_l * s2)),
            (0b111, 0b111, re(t.w_r * s2)),
            (0b000, 0b110, t.q_r.conj() * (c2 * c)),
            (0b001, 0b111, t.q_r.conj() * (s2 * c)),
            (0b001, 0b100, -t.q_l.conj() * (c2 * s)),
            (0b011, 0b110, -t.q_l.conj() * (s2 * s)),
            (0b111, 0b100, -t.q_r * t.q_l.conj() * (s * c)),
        ],
        half,
    )
}

/// ρ⁺_AR̄: ½[C⁴|000⟩⟨000| + S²C²(|001⟩⟨001| + |010⟩⟨010|) + S⁴|011⟩⟨011| +
/// |q_R|²(C²|100⟩⟨100| + S²|110⟩⟨110|) + |q_L|²(S²|111⟩⟨111| + C²|110⟩⟨110|) +
/// q_L*(C³|000⟩⟨110| + S²C|001⟩⟨111|) + q_R*(C²S|001⟩⟨100| + S³|011⟩⟨110|) +
/// q_R q_L* SC|100⟩⟨111|] + h.c. of the off-diagonal part.
fn alice_antirob_full<T: Scalar>(t: &Trig<T>, half: T) -> CMatrix<T> {
    let (c, s) = (t.c, t.s);
    let c2 = c * c;
    let s2 = s * s;
    hermitian(
        8,
        &[
            (0b000, 0b000, re(c2 * c2)),
            (0b001, 0b001, re(s2 * c2)),
            (0b010, 0b010, re(s2 * c2)),
            (0b011, 0b011, re(s2 * s2)),
            (0b100, 0b100, re(t.w_r * c2)),
            (0b110, 0b110, re(t.w_r * s2 + t.w_l * c2)),
            (0b111, 0b111, re(t.w_l * s2)),
            (0b000, 0b110, t.q_l.conj() * (c2 * c)),
            (0b001, 0b111, t.q_l.conj() * (s2 * c)),
            (0b001, 0b100, t.q_r.conj() * (c2 * s)),
            (0b011, 0b110, t.q_r.conj() * (s2 * s)),
            (0b100, 0b111, t.q_r * t.q_l.conj() * (s * c)),
        ],
        half,
    )
}

/// The four detector-filtered 4×4 matrices, basis |alice, kept mode⟩.
fn sector_matrix<T: Scalar>(
    t: &Trig<T>,
    half: T,
    pair: ObserverPair,
    detector: Detector,
) -> CMatrix<T> {
    let (c, s) = (t.c, t.s);
    let c2 = c * c;
    let s2 = s * s;
    let entries: Vec<(usize, usize, Complex<T>)> = match (pair, detector) {
        // ½[C²|00⟩⟨00| + S²|01⟩⟨01| + |q_L|²C²|10⟩⟨10|
        //   + (|q_R|² + |q_L|²S²)|11⟩⟨11| + q_R*C|00⟩⟨11|] + h.c.
        (ObserverPair::AliceRob, Detector::ParticleOnly) => vec![
            (0b00, 0b00, re(c2)),
            (0b01, 0b01, re(s2)),
            (0b10, 0b10, re(t.w_l * c2)),
            (0b11, 0b11, re(t.w_r + t.w_l * s2)),
            (0b00, 0b11, t.q_r.conj() * c),
        ],
        // ½[C²|00⟩⟨00| + S²|01⟩⟨01| + (|q_L|² + |q_R|²C²)|10⟩⟨10|
        //   + |q_R|²S²|11⟩⟨11| − q_L*S|01⟩⟨10|] + h.c.
        (ObserverPair::AliceRob, Detector::AntiparticleOnly) => vec![
            (0b00, 0b00, re(c2)),
            (0b01, 0b01, re(s2)),
            (0b10, 0b10, re(t.w_l + t.w_r * c2)),
            (0b11, 0b11, re(t.w_r * s2)),
            (0b01, 0b10, -t.q_l.conj() * s),
        ],
        // ½[C²|00⟩⟨00| + S²|01⟩⟨01| + |q_R|²C²|10⟩⟨10|
        //   + (|q_L|² + |q_R|²S²)|11⟩⟨11| + q_L*C|00⟩⟨11|] + h.c.
        (ObserverPair::AliceAntiRob, Detector::ParticleOnly) => vec![
            (0b00, 0b00, re(c2)),
            (0b01, 0b01, re(s2)),
            (0b10, 0b10, re(t.w_r * c2)),
            (0b11, 0b11, re(t.w_l + t.w_r * s2)),
            (0b00, 0b11, t.q_l.conj() * c),
        ],
        // ½[C²|00⟩⟨00| + S²|01⟩⟨01| + (|q_R|² + |q_L|²C²)|10⟩⟨10|
        //   + |q_L|²S²|11⟩⟨11| + q_R*S|01⟩⟨10|] + h.c.
        (ObserverPair::AliceAntiRob, Detector::AntiparticleOnly) => vec![
            (0b00, 0b00, re(c2)),
            (0b01, 0b01, re(s2)),
            (0b10, 0b10, re(t.w_r + t.w_l * c2)),
            (0b11, 0b11, re(t.w_l * s2)),
            (0b01, 0b10, t.q_r.conj() * s),
        ],
        _ => unreachable!("full detector handled by the caller"),
    };
    hermitian(4, &entries, half)
}

/// The partial-transpose blocks of the occupation-entangled state whose
/// negative eigenvalues carry the whole negativity.
///
/// Full detector: two 3×3 blocks. Filtered detectors: one 2×2 block.
pub fn psi_plus_negativity_blocks<T: Scalar>(
    params: &UnruhParams<T>,
    pair: ObserverPair,
    detector: Detector,
) -> Vec<CMatrix<T>> {
    let t = trig(params);
    let half = (T::one() + T::one()).recip();
    let (c, s) = (t.c, t.s);
    let c2 = c * c;
    let s2 = s * s;
    let c3 = c2 * c;
    let s3 = s2 * s;
    match (pair, detector) {
        (ObserverPair::AliceRob, Detector::Full) => vec![
            // basis {|100⟩, |010⟩, |111⟩}
            hermitian(
                3,
                &[
                    (0, 0, re(c2 * t.w_l)),
                    (1, 1, re(s2 * c2)),
                    (2, 2, re(t.w_r * s2)),
                    (0, 1, t.q_r.conj() * c3),
                    (0, 2, -t.q_r.conj() * t.q_l * (s * c)),
                    (1, 2, -t.q_l * s3),
                ],
                half,
            ),
            // basis {|000⟩, |101⟩, |011⟩}
            hermitian(
                3,
                &[
                    (0, 0, re(c2 * c2)),
                    (1, 1, re(T::zero())),
                    (2, 2, re(s2 * s2)),
                    (0, 1, -t.q_l * (c2 * s)),
                    (1, 2, t.q_r.conj() * (s2 * c)),
                ],
                half,
            ),
        ],
        (ObserverPair::AliceAntiRob, Detector::Full) => vec![
            // basis {|111⟩, |010⟩, |100⟩}
            hermitian(
                3,
                &[
                    (0, 0, re(s2 * t.w_l)),
                    (1, 1, re(c2 * s2)),
                    (2, 2, re(t.w_r * c2)),
                    (0, 1, t.q_r.conj() * s3),
                    (0, 2, t.q_r.conj() * t.q_l * (s * c)),
                    (1, 2, t.q_l * c3),
                ],
                half,
            ),
            // basis {|011⟩, |101⟩, |000⟩}
            hermitian(
                3,
                &[
                    (0, 0, re(s2 * s2)),
                    (1, 1, re(T::zero())),
                    (2, 2, re(c2 * c2)),
                    (0, 1, t.q_l * (s2 * c)),
                    (1, 2, t.q_r.conj() * (c2 * s)),
                ],
                half,
            ),
        ],
        // basis {|10⟩, |01⟩}
        (ObserverPair::AliceRob, Detector::ParticleOnly) => vec![hermitian(
            2,
            &[
                (0, 0, re(t.w_l * c2)),
                (1, 1, re(s2)),
                (0, 1, t.q_r.conj() * c),
            ],
            half,
        )],
        // basis {|11⟩, |00⟩}
        (ObserverPair::AliceRob, Detector::AntiparticleOnly) => vec![hermitian(
            2,
            &[
                (0, 0, re(t.w_r * s2)),
                (1, 1, re(c2)),
                (0, 1, -t.q_l.conj() * s),
            ],
            half,
        )],
        // basis {|10⟩, |01⟩}
        (ObserverPair::AliceAntiRob, Detector::ParticleOnly) => vec![hermitian(
            2,
            &[
                (0, 0, re(t.w_r * c2)),
                (1, 1, re(s2)),
                (0, 1, t.q_l.conj() * c),
            ],
            half,
        )],
        // basis {|11⟩, |00⟩}
        (ObserverPair::AliceAntiRob, Detector::AntiparticleOnly) => vec![hermitian(
            2,
            &[
                (0, 0, re(t.w_l * s2)),
                (1, 1, re(c2)),
                (0, 1, t.q_r.conj() * s),
            ],
            half,
        )],
    }
}

/// The single 2×2 block of the species-entangled state, basis
/// {|−10⟩, |+01⟩}: zero diagonal, off-diagonal ½(|q_R|²C² − |q_L|²S²) for
/// Alice–Rob and ½(|q_L|²C² − |q_R|²S²) for Alice–AntiRob.
pub fn psi_one_negativity_block<T: Scalar>(
    params: &UnruhParams<T>,
    pair: ObserverPair,
) -> CMatrix<T> {
    let t = trig(params);
    let half = (T::one() + T::one()).recip();
    let c2 = t.c * t.c;
    let s2 = t.s * t.s;
    let w = match pair {
        ObserverPair::AliceRob => t.w_r * c2 - t.w_l * s2,
        ObserverPair::AliceAntiRob => t.w_l * c2 - t.w_r * s2,
    };
    hermitian(2, &[(0, 1, re(w))], half)
}

/// Closed-form eigenvalues of a 2×2 Hermitian matrix from the quadratic
/// characteristic polynomial, ascending.
pub fn eigenvalues_2x2<T: Scalar>(m: &CMatrix<T>) -> [T; 2] {
    assert_eq!(m.dim(), 2);
    let a = m[(0, 0)].re;
    let d = m[(1, 1)].re;
    let b2 = m[(0, 1)].norm_sqr();
    let four = real::<T>(4.0);
    let half = (T::one() + T::one()).recip();
    let disc = ((a - d) * (a - d) + four * b2).sqrt();
    [half * (a + d - disc), half * (a + d + disc)]
}

/// Sum of |negative eigenvalues| over a set of blocks. 2×2 blocks use the
/// quadratic closed form; larger blocks use the Jacobi eigensolver.
pub fn block_negativity<T: Scalar>(blocks: &[CMatrix<T>]) -> T {
    let cutoff = real::<T>(-NEGATIVE_EIGENVALUE_CUTOFF);
    let mut total = T::zero();
    for block in blocks {
        let eigs = if block.dim() == 2 {
            eigenvalues_2x2(block).to_vec()
        } else {
            hermitian_eigenvalues_unchecked(block)
        };
        for ev in eigs {
            if ev < cutoff {
                total -= ev;
            }
        }
    }
    total
}
