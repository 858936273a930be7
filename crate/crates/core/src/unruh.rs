//! Unruh-mode operators and Bogoliubov coefficients.
//!
//! A uniformly accelerated observer sees the Minkowski vacuum through
//! single-frequency Rindler modes related to Unruh modes by a two-mode
//! rotation of angle r = arctan e^(−πΩ/a) ∈ [0, π/4]. This module builds
//! the four Unruh annihilators over the canonical Rindler register and the
//! weighted particle/antiparticle creators selected by the complex pair
//! (q_R, q_L) with |q_R|² + |q_L|² = 1.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::fock::{annihilation_matrix, creation_matrix, ModeRegister, OperatorMatrix};
use crate::scalar::{real, Scalar};

pub const MODE_PARTICLE_I: &str = "I+";
pub const MODE_ANTIPARTICLE_I: &str = "I-";
pub const MODE_PARTICLE_II: &str = "II+";
pub const MODE_ANTIPARTICLE_II: &str = "II-";

/// The canonical four-mode Rindler register (I⁺, I⁻, II⁺, II⁻).
///
/// Slot order matches the |ijkl⟩ shorthand used throughout: i = particle in
/// wedge I, j = antiparticle in I, k = particle in II, l = antiparticle in
/// II. The Jordan-Wigner string pairs the wedges as (I⁺, II⁻, I⁻, II⁺) — the
/// right-sector pair first, then the left-sector pair — which makes the
/// right/left Unruh sectors factorize with the standard sign choices.
pub fn rindler_register() -> ModeRegister {
    ModeRegister::with_string_order(
        [
            MODE_PARTICLE_I,
            MODE_ANTIPARTICLE_I,
            MODE_PARTICLE_II,
            MODE_ANTIPARTICLE_II,
        ],
        &[0, 3, 1, 2],
    )
    .expect("canonical register is well formed")
}

fn tolerance<T: Scalar>() -> T {
    real(1e-12)
}

/// Acceleration parameter and Unruh-mode mixing weights.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct UnruhParams<T> {
    r: T,
    q_right: Complex<T>,
    q_left: Complex<T>,
}

impl<T: Scalar> UnruhParams<T> {
    /// Validates r ∈ [0, π/4] and |q_R|² + |q_L|² = 1 (within 1e-12).
    pub fn new(r: T, q_right: Complex<T>, q_left: Complex<T>) -> Result<Self> {
        if !(r >= T::zero() && r <= T::FRAC_PI_4()) {
            return Err(Error::OutOfRange {
                what: "r",
                value: r.to_f64().unwrap_or(f64::NAN),
            });
        }
        let norm = q_right.norm_sqr() + q_left.norm_sqr();
        if (norm - T::one()).abs() > tolerance() {
            return Err(Error::UnnormalizedWeights {
                norm: norm.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(UnruhParams { r, q_right, q_left })
    }

    /// Builds q_R = |q_R| and q_L = √(1 − |q_R|²) e^(i·phase).
    pub fn from_modulus(r: T, q_right_abs: T, q_phase: T) -> Result<Self> {
        if !(q_right_abs >= T::zero() && q_right_abs <= T::one()) {
            return Err(Error::OutOfRange {
                what: "|q_R|",
                value: q_right_abs.to_f64().unwrap_or(f64::NAN),
            });
        }
        let q_left_abs = (T::one() - q_right_abs * q_right_abs).max(T::zero()).sqrt();
        Self::new(
            r,
            Complex::new(q_right_abs, T::zero()),
            Complex::from_polar(q_left_abs, q_phase),
        )
    }

    pub fn r(&self) -> T {
        self.r
    }

    pub fn q_right(&self) -> Complex<T> {
        self.q_right
    }

    pub fn q_left(&self) -> Complex<T> {
        self.q_left
    }
}

/// Mode-mixing coefficients between monochromatic Minkowski and Rindler
/// solutions, for one (Rindler energy, Minkowski energy) pair.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BogoCoefficients<T> {
    pub alpha_i: Complex<T>,
    pub beta_i: Complex<T>,
    pub gamma_i: Complex<T>,
    pub eta_i: Complex<T>,
    pub alpha_ii: Complex<T>,
    pub beta_ii: Complex<T>,
    pub gamma_ii: Complex<T>,
    pub eta_ii: Complex<T>,
}

/// r = arctan e^(−πΩ/a) for a massless mode of frequency Ω seen at proper
/// acceleration a. Tends to 0 as a → 0⁺ and to π/4 as a → ∞.
pub fn r_of_acceleration<T: Scalar>(omega: T, a: T) -> Result<T> {
    if omega <= T::zero() {
        return Err(Error::OutOfRange {
            what: "omega",
            value: omega.to_f64().unwrap_or(f64::NAN),
        });
    }
    if a <= T::zero() {
        return Err(Error::OutOfRange {
            what: "a",
            value: a.to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok((-T::PI() * omega / a).exp().atan())
}

/// Coefficient set for Rindler energy E_Ω, Minkowski energy E_ω and rapidity
/// parameter θ:
///
/// α_I = e^(iθE_Ω) (1+i)/(2√(πE_ω)) cos r_Ω,  β_I = −(same prefactor) sin r_Ω,
/// γ_I = −β_I*, η_I = α_I*, and region II equals the conjugate of region I,
/// with tan r_Ω = e^(−πE_Ω).
pub fn bogoliubov_coefficients<T: Scalar>(
    e_rindler: T,
    e_minkowski: T,
    theta: T,
) -> Result<BogoCoefficients<T>> {
    if e_minkowski <= T::zero() {
        return Err(Error::OutOfRange {
            what: "E_omega",
            value: e_minkowski.to_f64().unwrap_or(f64::NAN),
        });
    }
    let r_omega = (-T::PI() * e_rindler).exp().atan();
    let two = T::one() + T::one();
    let amp = T::one() / (two * (T::PI() * e_minkowski).sqrt());
    let prefactor = Complex::from_polar(amp, theta * e_rindler) * Complex::new(T::one(), T::one());
    let alpha_i = prefactor * r_omega.cos();
    let beta_i = -prefactor * r_omega.sin();
    let gamma_i = -beta_i.conj();
    let eta_i = alpha_i.conj();
    Ok(BogoCoefficients {
        alpha_i,
        beta_i,
        gamma_i,
        eta_i,
        alpha_ii: alpha_i.conj(),
        beta_ii: beta_i.conj(),
        gamma_ii: gamma_i.conj(),
        eta_ii: eta_i.conj(),
    })
}

/// The four Unruh annihilators as dense operators on the Rindler register.
#[derive(Clone, Debug)]
pub struct UnruhAnnihilators<T> {
    pub c_right: OperatorMatrix<T>,
    pub c_left: OperatorMatrix<T>,
    pub d_right: OperatorMatrix<T>,
    pub d_left: OperatorMatrix<T>,
}

/// C_R = cos r·c_I − sin r·d_II†, C_L = cos r·c_II − sin r·d_I†,
/// D_R† = sin r·c_I + cos r·d_II†, D_L† = sin r·c_II + cos r·d_I†.
///
/// `r` is not range-restricted here; the operators are well defined for any
/// angle (cos is even and sin odd in r).
pub fn unruh_annihilators<T: Scalar>(
    register: &ModeRegister,
    r: T,
) -> Result<UnruhAnnihilators<T>> {
    if *register != rindler_register() {
        return Err(Error::WrongRegister);
    }
    let cos = Complex::new(r.cos(), T::zero());
    let sin = Complex::new(r.sin(), T::zero());
    let c_i = annihilation_matrix(register, MODE_PARTICLE_I)?;
    let c_ii = annihilation_matrix(register, MODE_PARTICLE_II)?;
    let d_i_dag = creation_matrix(register, MODE_ANTIPARTICLE_I)?;
    let d_ii_dag = creation_matrix(register, MODE_ANTIPARTICLE_II)?;

    let c_right = &c_i.scale(cos) - &d_ii_dag.scale(sin);
    let c_left = &c_ii.scale(cos) - &d_i_dag.scale(sin);
    let d_right = (&c_i.scale(sin) + &d_ii_dag.scale(cos)).adjoint();
    let d_left = (&c_ii.scale(sin) + &d_i_dag.scale(cos)).adjoint();
    Ok(UnruhAnnihilators {
        c_right,
        c_left,
        d_right,
        d_left,
    })
}

/// Weighted Unruh creators.
#[derive(Clone, Debug)]
pub struct UnruhCreators<T> {
    /// c_U† = q_R C_R† + q_L C_L†
    pub particle: OperatorMatrix<T>,
    /// d_U† = q_L D_R† + q_R D_L† (the antiparticle weights pair the
    /// opposite sectors, so that particle and antiparticle excitations refer
    /// to the same wedges)
    pub antiparticle: OperatorMatrix<T>,
}

pub fn unruh_creators<T: Scalar>(
    register: &ModeRegister,
    params: &UnruhParams<T>,
) -> Result<UnruhCreators<T>> {
    let ops = unruh_annihilators(register, params.r())?;
    let particle = &ops.c_right.adjoint().scale(params.q_right())
        + &ops.c_left.adjoint().scale(params.q_left());
    let antiparticle = &ops.d_right.adjoint().scale(params.q_left())
        + &ops.d_left.adjoint().scale(params.q_right());
    Ok(UnruhCreators {
        particle,
        antiparticle,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::apply;
    use crate::fock::StateVector;

    const FROZEN_ARCTAN_EXP_NEG_PI: f64 = 0.043187048524782126;

    #[test]
    fn r_limits() {
        // a → ∞ gives r → π/4, a → 0⁺ gives r → 0
        let r_fast = r_of_acceleration(1.0f64, 1e12).unwrap();
        assert!((r_fast - std::f64::consts::FRAC_PI_4).abs() < 1e-10);
        let r_slow = r_of_acceleration(1.0f64, 1e-2).unwrap();
        assert!(r_slow < 1e-100);
    }

    #[test]
    fn r_at_unit_ratio() {
        let r = r_of_acceleration(1.0f64, 1.0).unwrap();
        assert!((r - FROZEN_ARCTAN_EXP_NEG_PI).abs() < 1e-15);
    }

    #[test]
    fn r_rejects_nonpositive_inputs() {
        assert!(r_of_acceleration(0.0f64, 1.0).is_err());
        assert!(r_of_acceleration(1.0f64, -2.0).is_err());
    }

    #[test]
    fn bogoliubov_symmetries_hold_exactly() {
        let co = bogoliubov_coefficients(0.8f64, 2.3, 0.4).unwrap();
        assert_eq!(co.gamma_i, -co.beta_i.conj());
        assert_eq!(co.eta_i, co.alpha_i.conj());
        assert_eq!(co.alpha_ii, co.alpha_i.conj());
        assert_eq!(co.beta_ii, co.beta_i.conj());
        assert_eq!(co.gamma_ii, co.gamma_i.conj());
        assert_eq!(co.eta_ii, co.eta_i.conj());
    }

    #[test]
    fn bogoliubov_zero_rindler_energy_balances_amplitudes() {
        // E_Ω = 0 means tan r_Ω = 1, so |α_I| = |β_I|
        let co = bogoliubov_coefficients(0.0f64, 1.0, 0.0).unwrap();
        assert!((co.alpha_i.norm() - co.beta_i.norm()).abs() < 1e-15);
    }

    #[test]
    fn bogoliubov_modulus_identity() {
        // |α_I|² + |β_I|² = 1/(2πE_ω)
        for e in [0.3f64, 1.0, 4.7] {
            let co = bogoliubov_coefficients(0.9, e, -1.2).unwrap();
            let lhs = co.alpha_i.norm_sqr() + co.beta_i.norm_sqr();
            let rhs = 1.0 / (2.0 * std::f64::consts::PI * e);
            assert!((lhs - rhs).abs() < 1e-12);
        }
    }

    #[test]
    fn bogoliubov_rejects_nonpositive_minkowski_energy() {
        assert!(bogoliubov_coefficients(1.0f64, 0.0, 0.0).is_err());
    }

    #[test]
    fn annihilators_reduce_to_rindler_ops_at_zero() {
        let reg = rindler_register();
        let ops = unruh_annihilators::<f64>(&reg, 0.0).unwrap();
        let c_i = annihilation_matrix(&reg, MODE_PARTICLE_I).unwrap();
        assert_eq!(ops.c_right.max_abs_diff(&c_i), 0.0);
    }

    #[test]
    fn unruh_operators_satisfy_car() {
        let reg = rindler_register();
        let ident = OperatorMatrix::<f64>::identity(reg.clone());
        for r in [0.0, 0.2, std::f64::consts::FRAC_PI_4] {
            let ops = unruh_annihilators(&reg, r).unwrap();
            let set = [&ops.c_right, &ops.c_left, &ops.d_right, &ops.d_left];
            for (i, a) in set.iter().enumerate() {
                for (j, b) in set.iter().enumerate() {
                    let anti = a.anticommutator(&b.adjoint());
                    let dev = if i == j {
                        anti.max_abs_diff(&ident)
                    } else {
                        anti.matrix().max_abs()
                    };
                    assert!(dev <= 1e-14, "{{op{i}, op{j}†}} deviates by {dev}");
                    let anti2 = a.anticommutator(b);
                    assert!(anti2.matrix().max_abs() <= 1e-14);
                }
            }
        }
    }

    #[test]
    fn sign_flip_of_r_flips_only_sine_terms() {
        let reg = rindler_register();
        for r in [0.1f64, 0.5] {
            let plus = unruh_annihilators(&reg, r).unwrap();
            let minus = unruh_annihilators(&reg, -r).unwrap();
            let c_i = annihilation_matrix::<f64>(&reg, MODE_PARTICLE_I).unwrap();
            let d_ii_dag = creation_matrix::<f64>(&reg, MODE_ANTIPARTICLE_II).unwrap();
            let two_cos = c_i.scale(Complex::new(2.0 * r.cos(), 0.0));
            let two_sin = d_ii_dag.scale(Complex::new(2.0 * r.sin(), 0.0));
            let sum = &plus.c_right + &minus.c_right;
            let diff = &plus.c_right - &minus.c_right;
            assert!(sum.max_abs_diff(&two_cos) < 1e-15);
            assert!(diff.max_abs_diff(&two_sin.scale(Complex::new(-1.0, 0.0))) < 1e-15);
        }
    }

    #[test]
    fn creators_reduce_to_region_i_at_zero() {
        let reg = rindler_register();
        let params = UnruhParams::from_modulus(0.0, 1.0, 0.0).unwrap();
        let ops = unruh_creators::<f64>(&reg, &params).unwrap();
        let c_i_dag = creation_matrix(&reg, MODE_PARTICLE_I).unwrap();
        assert_eq!(ops.particle.max_abs_diff(&c_i_dag), 0.0);
    }

    #[test]
    fn antiparticle_weight_sits_on_left_sector() {
        // q_R = 1 puts the full antiparticle weight on D_L†
        let reg = rindler_register();
        let r = 0.3;
        let params = UnruhParams::from_modulus(r, 1.0, 0.0).unwrap();
        let ops = unruh_creators::<f64>(&reg, &params).unwrap();
        let d_left_dag = unruh_annihilators(&reg, r).unwrap().d_left.adjoint();
        assert!(ops.antiparticle.max_abs_diff(&d_left_dag) < 1e-15);
    }

    #[test]
    fn weighted_creators_satisfy_car() {
        let reg = rindler_register();
        let ident = OperatorMatrix::<f64>::identity(reg.clone());
        for (r, qa, ph) in [
            (0.0, 1.0, 0.0),
            (0.4, 0.8, 1.1),
            (std::f64::consts::FRAC_PI_4, 0.6, -2.0),
        ] {
            let params = UnruhParams::from_modulus(r, qa, ph).unwrap();
            let ops = unruh_creators(&reg, &params).unwrap();
            let c_u = ops.particle.adjoint();
            let d_u = ops.antiparticle.adjoint();
            assert!(c_u.anticommutator(&ops.particle).max_abs_diff(&ident) <= 1e-14);
            assert!(d_u.anticommutator(&ops.antiparticle).max_abs_diff(&ident) <= 1e-14);
            assert!(c_u.anticommutator(&ops.antiparticle).matrix().max_abs() <= 1e-14);
            assert!(c_u.anticommutator(&d_u).matrix().max_abs() <= 1e-14);
        }
    }

    #[test]
    fn wrong_register_is_rejected() {
        let other = ModeRegister::new(["a", "b", "c", "d"]).unwrap();
        assert_eq!(
            unruh_annihilators::<f64>(&other, 0.1).unwrap_err(),
            Error::WrongRegister
        );
    }

    #[test]
    fn params_validation() {
        assert!(UnruhParams::new(-0.1f64, Complex::new(1.0, 0.0), Complex::new(0.0, 0.0)).is_err());
        assert!(UnruhParams::new(0.1f64, Complex::new(1.0, 0.0), Complex::new(0.5, 0.0)).is_err());
        assert!(UnruhParams::from_modulus(0.1f64, 1.5, 0.0).is_err());
        let p = UnruhParams::from_modulus(0.2f64, 0.6, 0.25).unwrap();
        assert!((p.q_left().norm() - 0.8).abs() < 1e-15);
        // vacuum annihilation is checked in the states module
        let _ = StateVector::<f64>::zero(rindler_register());
        let reg = rindler_register();
        let ops = unruh_annihilators::<f64>(&reg, 0.2).unwrap();
        let vac = StateVector::basis_state(reg, 0).unwrap();
        // at r = 0.2 the bare |0000⟩ is *not* the vacuum
        assert!(apply(&ops.c_right, &vac).unwrap().norm() > 0.0);
    }
}
