//! The Rindler-basis vacuum, the Unruh particle/antiparticle excitations,
//! and the three entangled states shared between an inertial observer
//! (Alice) and the Rindler sector.
//!
//! Every constructor has a closed form; the excitations additionally have an
//! operator route (creator applied to the vacuum) used as the module's
//! central cross-check.

use num_complex::Complex;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::fock::{apply, ModeRegister, StateVector};
use crate::scalar::Scalar;
use crate::unruh::{rindler_register, unruh_creators, UnruhParams};

/// Basis index of |ijkl⟩ = |i⟩⁺_I |j⟩⁻_I |k⟩⁺_II |l⟩⁻_II.
pub fn ket4(i: usize, j: usize, k: usize, l: usize) -> usize {
    debug_assert!(i < 2 && j < 2 && k < 2 && l < 2);
    i | (j << 1) | (k << 2) | (l << 3)
}

/// Meaning of Alice's two levels.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AliceBasis {
    /// Levels are occupation numbers |0⟩, |1⟩.
    Occupation,
    /// Levels are species |+⟩ (particle), |−⟩ (antiparticle).
    Species,
}

/// Which of the three entangled states to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StateKind {
    /// (|0⟩_M |0⟩_U + |1⟩_M |1⟩⁺_U)/√2 — particle excitation.
    PsiPlus,
    /// (|0⟩_M |0⟩_U + |1⟩_M |1⟩⁻_U)/√2 — antiparticle excitation.
    PsiMinus,
    /// (|+⟩_M |1⟩⁻_U + |−⟩_M |1⟩⁺_U)/√2 — species-entangled.
    PsiOne,
}

impl StateKind {
    pub const ALL: [StateKind; 3] = [StateKind::PsiPlus, StateKind::PsiMinus, StateKind::PsiOne];
}

/// Pure state on Alice ⊗ Rindler, Alice first: amplitude index
/// a·16 + rindler_index with a ∈ {0, 1}.
#[derive(Clone, Debug, PartialEq)]
pub struct CompositeState<T> {
    register: ModeRegister,
    alice: AliceBasis,
    amplitudes: Vec<Complex<T>>,
}

impl<T: Scalar> CompositeState<T> {
    pub fn register(&self) -> &ModeRegister {
        &self.register
    }

    pub fn alice_basis(&self) -> AliceBasis {
        self.alice
    }

    /// Flat amplitude table of length 32.
    pub fn amplitudes(&self) -> &[Complex<T>] {
        &self.amplitudes
    }

    pub fn amplitude(&self, alice: usize, rindler: usize) -> Complex<T> {
        self.amplitudes[alice * self.register.dim() + rindler]
    }

    pub fn norm_sqr(&self) -> T {
        self.amplitudes
            .iter()
            .map(|a| a.norm_sqr())
            .fold(T::zero(), |a, b| a + b)
    }
}

/// The vacuum seen in the Rindler basis:
/// cos²r·|0000⟩ − sin r cos r·|0110⟩ + sin r cos r·|1001⟩ − sin²r·|1111⟩.
///
/// Annihilated by all four Unruh operators for every r in [0, π/4].
pub fn rindler_vacuum<T: Scalar>(r: T) -> Result<StateVector<T>> {
    if !(r >= T::zero() && r <= T::FRAC_PI_4()) {
        return Err(Error::OutOfRange {
            what: "r",
            value: r.to_f64().unwrap_or(f64::NAN),
        });
    }
    let (c, s) = (r.cos(), r.sin());
    let mut amp = vec![Complex::zero(); 16];
    amp[ket4(0, 0, 0, 0)] = Complex::new(c * c, T::zero());
    amp[ket4(0, 1, 1, 0)] = Complex::new(-s * c, T::zero());
    amp[ket4(1, 0, 0, 1)] = Complex::new(s * c, T::zero());
    amp[ket4(1, 1, 1, 1)] = Complex::new(-s * s, T::zero());
    StateVector::from_amplitudes(rindler_register(), amp)
}

/// Single Unruh particle |1⟩⁺_U, closed form:
/// q_R [cos r |1000⟩ − sin r |1110⟩] + q_L [cos r |0010⟩ + sin r |1011⟩].
pub fn unruh_particle<T: Scalar>(params: &UnruhParams<T>) -> StateVector<T> {
    let (c, s) = (params.r().cos(), params.r().sin());
    let (q_r, q_l) = (params.q_right(), params.q_left());
    let mut amp = vec![Complex::zero(); 16];
    amp[ket4(1, 0, 0, 0)] = q_r * c;
    amp[ket4(1, 1, 1, 0)] = -q_r * s;
    amp[ket4(0, 0, 1, 0)] = q_l * c;
    amp[ket4(1, 0, 1, 1)] = q_l * s;
    StateVector::from_amplitudes(rindler_register(), amp).expect("length 16")
}

/// Single Unruh antiparticle |1⟩⁻_U, closed form:
/// q_L [cos r |0001⟩ − sin r |0111⟩] + q_R [cos r |0100⟩ + sin r |1101⟩].
pub fn unruh_antiparticle<T: Scalar>(params: &UnruhParams<T>) -> StateVector<T> {
    let (c, s) = (params.r().cos(), params.r().sin());
    let (q_r, q_l) = (params.q_right(), params.q_left());
    let mut amp = vec![Complex::zero(); 16];
    amp[ket4(0, 0, 0, 1)] = q_l * c;
    amp[ket4(0, 1, 1, 1)] = -q_l * s;
    amp[ket4(0, 1, 0, 0)] = q_r * c;
    amp[ket4(1, 1, 0, 1)] = q_r * s;
    StateVector::from_amplitudes(rindler_register(), amp).expect("length 16")
}

/// Operator route for [`unruh_particle`]: c_U† applied to the vacuum.
pub fn unruh_particle_from_operators<T: Scalar>(params: &UnruhParams<T>) -> StateVector<T> {
    let reg = rindler_register();
    let creators = unruh_creators(&reg, params).expect("canonical register");
    let vac = rindler_vacuum(params.r()).expect("params validated r");
    apply(&creators.particle, &vac).expect("matching registers")
}

/// Operator route for [`unruh_antiparticle`]: d_U† applied to the vacuum.
pub fn unruh_antiparticle_from_operators<T: Scalar>(params: &UnruhParams<T>) -> StateVector<T> {
    let reg = rindler_register();
    let creators = unruh_creators(&reg, params).expect("canonical register");
    let vac = rindler_vacuum(params.r()).expect("params validated r");
    apply(&creators.antiparticle, &vac).expect("matching registers")
}

/// One of the three entangled states as a 32-amplitude vector on
/// Alice ⊗ Rindler.
pub fn entangled_state<T: Scalar>(kind: StateKind, params: &UnruhParams<T>) -> CompositeState<T> {
    let inv_sqrt2 = Complex::new((T::one() + T::one()).sqrt().recip(), T::zero());
    let (alice, branch0, branch1) = match kind {
        StateKind::PsiPlus => (
            AliceBasis::Occupation,
            rindler_vacuum(params.r()).expect("validated r"),
            unruh_particle(params),
        ),
        StateKind::PsiMinus => (
            AliceBasis::Occupation,
            rindler_vacuum(params.r()).expect("validated r"),
            unruh_antiparticle(params),
        ),
        StateKind::PsiOne => (
            AliceBasis::Species,
            unruh_antiparticle(params),
            unruh_particle(params),
        ),
    };
    let mut amplitudes = Vec::with_capacity(32);
    amplitudes.extend(branch0.amplitudes().iter().map(|&a| a * inv_sqrt2));
    amplitudes.extend(branch1.amplitudes().iter().map(|&a| a * inv_sqrt2));
    CompositeState {
        register: rindler_register(),
        alice,
        amplitudes,
    }
}
