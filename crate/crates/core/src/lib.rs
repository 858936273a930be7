//! Entanglement of a Dirac field mode between an inertial observer and a
//! uniformly accelerated one, built from first principles on a four-mode
//! fermionic Fock space.
//!
//! The crate constructs the Rindler-basis vacuum and single-excitation
//! states of a Grassmann-scalar field mode, assembles three maximally
//! entangled states shared with an inertial two-level system (Alice), and
//! computes every reduced density matrix and negativity an accelerated
//! observer (Rob, wedge I) or his counterpart (AntiRob, wedge II) can see —
//! with or without a detector that distinguishes particles from
//! antiparticles.
//!
//! Layers, bottom to top:
//!
//! * [`fock`] — occupation-number basis, Jordan-Wigner creation and
//!   annihilation matrices; the brute-force oracle everything else is
//!   checked against.
//! * [`unruh`] — the Bogoliubov layer: the acceleration map
//!   r = arctan e^(−πΩ/a), mode-mixing coefficients, the four Unruh
//!   annihilators and the weighted (q_R, q_L) creators.
//! * [`states`] — the vacuum, the particle/antiparticle Unruh excitations
//!   and the three entangled states, each with a closed form and an
//!   operator-route cross-check.
//! * [`entanglement`] — partial trace, partial transpose, Hermitian
//!   eigenvalues, negativity, closed-form results and thresholds.
//! * [`analytic`] — the same reduced matrices written out entry by entry, as
//!   an independent reference route.
//!
//! All numerics are generic over the real scalar type via [`Scalar`]
//! (`f32` or `f64`); the `*64` aliases below pick the default.
//!
//! ```
//! use rindler::entanglement::{negativity_of, Detector, ObserverPair};
//! use rindler::states::StateKind;
//! use rindler::unruh::UnruhParams;
//!
//! // Bell state at zero acceleration: negativity 1/2.
//! let params = UnruhParams::<f64>::from_modulus(0.0, 1.0, 0.0).unwrap();
//! let n = negativity_of(
//!     StateKind::PsiPlus,
//!     &params,
//!     ObserverPair::AliceRob,
//!     Detector::Full,
//! );
//! assert!((n - 0.5).abs() < 1e-12);
//! ```

pub mod analytic;
pub mod entanglement;
pub mod error;
pub mod fock;
pub mod linalg;
pub mod scalar;
pub mod states;
pub mod unruh;

pub use error::{Error, Result};
pub use scalar::{real, Scalar};

/// Default-precision aliases.
pub type StateVector64 = fock::StateVector<f64>;
pub type OperatorMatrix64 = fock::OperatorMatrix<f64>;
pub type CompositeState64 = states::CompositeState<f64>;
pub type DensityMatrix64 = entanglement::DensityMatrix<f64>;
pub type UnruhParams64 = unruh::UnruhParams<f64>;
pub type BogoCoefficients64 = unruh::BogoCoefficients<f64>;

/// Single-precision aliases.
pub type StateVector32 = fock::StateVector<f32>;
pub type OperatorMatrix32 = fock::OperatorMatrix<f32>;
pub type CompositeState32 = states::CompositeState<f32>;
pub type DensityMatrix32 = entanglement::DensityMatrix<f32>;
pub type UnruhParams32 = unruh::UnruhParams<f32>;
pub type BogoCoefficients32 = unruh::BogoCoefficients<f32>;
