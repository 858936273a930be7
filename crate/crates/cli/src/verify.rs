//! Self-verification: re-derives the library's analytic identities with the
//! brute-force operator layer and reports the worst deviation per check.
//!
//! Every check reduces to a single nonnegative deviation that must stay at
//! or below the chosen tolerance. Deviations are maxima over parameter
//! grids, so a pass means the identity held everywhere it was sampled.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use rindler::analytic::{
    block_negativity, psi_one_negativity_block, psi_plus_negativity_blocks, psi_plus_reduced,
};
use rindler::entanglement::{
    analytic_negativity_psi1, antiparticle_transfer_threshold, negativity_of, reduce,
    symmetry_check_psi_plus_minus, Detector, ObserverPair, PartitionSpec,
};
use rindler::fock::{annihilation_matrix, apply, OperatorMatrix};
use rindler::states::{
    entangled_state, rindler_vacuum, unruh_antiparticle, unruh_antiparticle_from_operators,
    unruh_particle, unruh_particle_from_operators, StateKind,
};
use rindler::unruh::{
    rindler_register, unruh_annihilators, unruh_creators, UnruhParams, MODE_ANTIPARTICLE_I,
    MODE_ANTIPARTICLE_II, MODE_PARTICLE_I, MODE_PARTICLE_II,
};

use crate::output::sig12;

const FRAC_PI_4: f64 = std::f64::consts::FRAC_PI_4;
const PAIRS: [ObserverPair; 2] = [ObserverPair::AliceRob, ObserverPair::AliceAntiRob];
const DETECTORS: [Detector; 3] = [
    Detector::Full,
    Detector::ParticleOnly,
    Detector::AntiparticleOnly,
];

/// Frozen endpoint of the |q_R| = 1 full-negativity curves at r = π/4:
/// both bipartitions meet at 1/4.
pub const EQUAL_SPLIT_ENDPOINT: f64 = 0.25;

pub struct CheckResult {
    pub name: &'static str,
    pub deviation: f64,
}

fn params(r: f64, qa: f64, phase: f64) -> UnruhParams<f64> {
    UnruhParams::from_modulus(r, qa, phase).expect("grid values are in range")
}

fn r_grid(n: usize) -> Vec<f64> {
    (0..n)
        .map(|i| FRAC_PI_4 * (i as f64 / (n - 1) as f64))
        .collect()
}

const QA_GRID: [f64; 5] = [1.0, 0.9, 0.8, 0.71, std::f64::consts::FRAC_1_SQRT_2];
const PHASES: [f64; 3] = [0.0, 0.9, -2.2];

/// Runs every check and returns (name, worst deviation) pairs.
pub fn run_all() -> Vec<CheckResult> {
    vec![
        vacuum_annihilation(),
        rindler_car(),
        unruh_car(),
        reduced_matrix_match(ObserverPair::AliceRob),
        reduced_matrix_match(ObserverPair::AliceAntiRob),
        sector_matrix_match(),
        block_equivalence(),
        psi1_closed_form(),
        psi1_vanishing_point(),
        psi1_sector_extinction(),
        transfer_threshold(),
        symmetry_relations(),
        phase_independence(),
        sector_monotonicity(),
        limiting_values(),
    ]
}

/// ‖X|0_Ω⟩‖ for all four Unruh annihilators over 50 accelerations.
fn vacuum_annihilation() -> CheckResult {
    let reg = rindler_register();
    let mut worst = 0.0f64;
    for r in r_grid(50) {
        let vac = rindler_vacuum(r).unwrap();
        let ops = unruh_annihilators(&reg, r).unwrap();
        for op in [&ops.c_right, &ops.c_left, &ops.d_right, &ops.d_left] {
            worst = worst.max(apply(op, &vac).unwrap().norm());
        }
    }
    CheckResult {
        name: "vacuum annihilated by C_R, C_L, D_R, D_L (50 r values)",
        deviation: worst,
    }
}

fn car_deviation(ops: &[&OperatorMatrix<f64>], ident: &OperatorMatrix<f64>) -> f64 {
    let mut worst = 0.0f64;
    for (i, a) in ops.iter().enumerate() {
        for (j, b) in ops.iter().enumerate() {
            let anti = a.anticommutator(&b.adjoint());
            worst = worst.max(if i == j {
                anti.max_abs_diff(ident)
            } else {
                anti.matrix().max_abs()
            });
            worst = worst.max(a.anticommutator(b).matrix().max_abs());
        }
    }
    worst
}

/// {c, c†} = 1, everything else anticommutes, for the four Rindler modes.
fn rindler_car() -> CheckResult {
    let reg = rindler_register();
    let ident = OperatorMatrix::identity(reg.clone());
    let ops: Vec<OperatorMatrix<f64>> = [
        MODE_PARTICLE_I,
        MODE_ANTIPARTICLE_I,
        MODE_PARTICLE_II,
        MODE_ANTIPARTICLE_II,
    ]
    .iter()
    .map(|m| annihilation_matrix(&reg, m).unwrap())
    .collect();
    let refs: Vec<&OperatorMatrix<f64>> = ops.iter().collect();
    CheckResult {
        name: "rindler mode anticommutation relations",
        deviation: car_deviation(&refs, &ident),
    }
}

/// Same for the derived Unruh operators over 20 (r, q) samples.
fn unruh_car() -> CheckResult {
    let reg = rindler_register();
    let ident = OperatorMatrix::identity(reg.clone());
    let mut worst = 0.0f64;
    for (i, r) in r_grid(20).into_iter().enumerate() {
        let qa = QA_GRID[i % QA_GRID.len()];
        let phase = PHASES[i % PHASES.len()];
        let p = params(r, qa, phase);
        let ops = unruh_annihilators(&reg, r).unwrap();
        worst = worst.max(car_deviation(
            &[&ops.c_right, &ops.c_left, &ops.d_right, &ops.d_left],
            &ident,
        ));
        let creators = unruh_creators(&reg, &p).unwrap();
        let c_u = creators.particle.adjoint();
        let d_u = creators.antiparticle.adjoint();
        worst = worst.max(car_deviation(&[&c_u, &d_u], &ident));
        // closed-form excitations against the operator route
        worst = worst.max(
            unruh_particle(&p)
                .max_abs_diff(&unruh_particle_from_operators(&p))
                .unwrap(),
        );
        worst = worst.max(
            unruh_antiparticle(&p)
                .max_abs_diff(&unruh_antiparticle_from_operators(&p))
                .unwrap(),
        );
    }
    CheckResult {
        name: "unruh operator anticommutators + dual-route excitations",
        deviation: worst,
    }
}

/// Pipeline reduction vs the entrywise closed form, 10×5 grid with complex
/// weights.
fn reduced_matrix_match(pair: ObserverPair) -> CheckResult {
    let mut worst = 0.0f64;
    for r in r_grid(10) {
        for qa in QA_GRID {
            for phase in PHASES {
                let p = params(r, qa, phase);
                let state = entangled_state(StateKind::PsiPlus, &p);
                let lhs = reduce(&state, &PartitionSpec::new(pair, Detector::Full));
                let rhs = psi_plus_reduced(&p, pair, Detector::Full);
                worst = worst.max(lhs.max_abs_diff(&rhs));
            }
        }
    }
    CheckResult {
        name: match pair {
            ObserverPair::AliceRob => "alice-rob reduced matrix vs closed form",
            ObserverPair::AliceAntiRob => "alice-antirob reduced matrix vs closed form",
        },
        deviation: worst,
    }
}

/// The four detector-filtered 4×4 matrices.
fn sector_matrix_match() -> CheckResult {
    let mut worst = 0.0f64;
    for r in r_grid(10) {
        for qa in QA_GRID {
            let p = params(r, qa, 0.8);
            let state = entangled_state(StateKind::PsiPlus, &p);
            for pair in PAIRS {
                for det in [Detector::ParticleOnly, Detector::AntiparticleOnly] {
                    let lhs = reduce(&state, &PartitionSpec::new(pair, det));
                    let rhs = psi_plus_reduced(&p, pair, det);
                    worst = worst.max(lhs.max_abs_diff(&rhs));
                }
            }
        }
    }
    CheckResult {
        name: "detector-filtered reduced matrices vs closed form",
        deviation: worst,
    }
}

/// Full-matrix negativity vs the negativity carried by the closed-form
/// partial-transpose blocks.
fn block_equivalence() -> CheckResult {
    let mut worst = 0.0f64;
    for r in r_grid(10) {
        for qa in QA_GRID {
            for phase in [0.0, -1.3] {
                let p = params(r, qa, phase);
                for pair in PAIRS {
                    for det in DETECTORS {
                        let full = negativity_of(StateKind::PsiPlus, &p, pair, det);
                        let blocks = psi_plus_negativity_blocks(&p, pair, det);
                        worst = worst.max((full - block_negativity(&blocks)).abs());
                    }
                    let full = negativity_of(StateKind::PsiOne, &p, pair, Detector::Full);
                    let block = psi_one_negativity_block(&p, pair);
                    worst =
                        worst.max((full - block_negativity(std::slice::from_ref(&block))).abs());
                }
            }
        }
    }
    CheckResult {
        name: "full negativity vs closed-form blocks",
        deviation: worst,
    }
}

/// Pipeline vs ½||q_R|²C² − |q_L|²S²| (and the swapped form).
fn psi1_closed_form() -> CheckResult {
    let mut worst = 0.0f64;
    for r in r_grid(30) {
        for qa in [1.0, 0.9, 0.8, 0.71, std::f64::consts::FRAC_1_SQRT_2, 0.4] {
            let p = params(r, qa, 0.35);
            for pair in PAIRS {
                let n = negativity_of(StateKind::PsiOne, &p, pair, Detector::Full);
                worst = worst.max((n - analytic_negativity_psi1(&p, pair)).abs());
            }
        }
    }
    CheckResult {
        name: "species state negativity vs closed formula",
        deviation: worst,
    }
}

/// Bisection on the pipeline locates the alice-antirob zero crossing where
/// tan²r = 1/|q_R|² − 1 predicts it.
fn psi1_vanishing_point() -> CheckResult {
    let mut worst = 0.0f64;
    for qa in [0.95f64, 0.9, 0.8, 0.75] {
        let predicted = (1.0 / (qa * qa) - 1.0).sqrt().atan();
        let n_at = |r: f64| {
            negativity_of(
                StateKind::PsiOne,
                &params(r, qa, 0.0),
                ObserverPair::AliceAntiRob,
                Detector::Full,
            )
        };
        // V-shaped curve: the forward difference is negative left of the
        // root and positive right of it; bisect on that sign, then undo the
        // half-step bias of the difference stencil
        let step = 1e-7;
        let descending = |r: f64| n_at(r + step) < n_at(r);
        let (mut lo, mut hi) = (0.0f64, FRAC_PI_4 - step);
        for _ in 0..60 {
            let mid = 0.5 * (lo + hi);
            if descending(mid) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let found = 0.5 * (lo + hi) + 0.5 * step;
        worst = worst.max((found - predicted).abs());
        worst = worst.max(n_at(predicted));
    }
    CheckResult {
        name: "species state vanishing point located by bisection",
        deviation: worst,
    }
}

/// Tracing either species out of the species-entangled state leaves nothing.
fn psi1_sector_extinction() -> CheckResult {
    let mut worst = 0.0f64;
    for r in r_grid(25) {
        for qa in [1.0, 0.85, 0.6, 0.3, 0.0] {
            let p = params(r, qa, 1.7);
            for pair in PAIRS {
                for det in [Detector::ParticleOnly, Detector::AntiparticleOnly] {
                    worst = worst.max(negativity_of(StateKind::PsiOne, &p, pair, det));
                }
            }
        }
    }
    CheckResult {
        name: "species state sector extinction",
        deviation: worst,
    }
}

/// cos²r = |q_L|²/|q_R|² separates zero from nonzero alice-rob antiparticle
/// negativity; above |q_R|² = 2/3 the sector never activates.
fn transfer_threshold() -> CheckResult {
    let mut worst = 0.0f64;
    // |q_R|² = 0.6: threshold inside (0, π/4)
    let qa = 0.6f64.sqrt();
    let threshold = antiparticle_transfer_threshold(&params(0.0, qa, 0.0)).unwrap();
    let n_at = |r: f64, qa: f64| {
        negativity_of(
            StateKind::PsiPlus,
            &params(r, qa, 0.0),
            ObserverPair::AliceRob,
            Detector::AntiparticleOnly,
        )
    };
    for i in 0..100 {
        let r = threshold * i as f64 / 100.0;
        worst = worst.max(n_at(r, qa));
    }
    if n_at(FRAC_PI_4, qa) <= 1e-6 {
        worst = worst.max(1.0); // sector must activate at the far end
    }
    // |q_R|² = 0.7 > 2/3: no threshold, zero on the whole range
    let qa = 0.7f64.sqrt();
    if antiparticle_transfer_threshold(&params(0.0, qa, 0.0)).is_some() {
        worst = worst.max(1.0);
    }
    for r in r_grid(100) {
        worst = worst.max(n_at(r, qa));
    }
    CheckResult {
        name: "antiparticle transfer threshold",
        deviation: worst,
    }
}

/// The six equalities tying the particle- and antiparticle-excitation
/// states together, on a 20×5 grid.
fn symmetry_relations() -> CheckResult {
    let mut worst = 0.0f64;
    for r in r_grid(20) {
        for qa in QA_GRID {
            let diffs = symmetry_check_psi_plus_minus(&params(r, qa, 0.6));
            for d in diffs {
                worst = worst.max(d);
            }
        }
    }
    CheckResult {
        name: "occupation-state symmetry relations (20x5 grid)",
        deviation: worst,
    }
}

/// Negativities depend only on |q_R|: randomizing both weight phases moves
/// nothing.
fn phase_independence() -> CheckResult {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut worst = 0.0f64;
    for qa in [0.85, std::f64::consts::FRAC_1_SQRT_2] {
        for r in [0.2, 0.6] {
            let baseline: Vec<f64> = all_negativities(&params(r, qa, 0.0));
            for _ in 0..10 {
                let phase_r = rng.random_range(-std::f64::consts::PI..std::f64::consts::PI);
                let phase_l = rng.random_range(-std::f64::consts::PI..std::f64::consts::PI);
                let base = params(r, qa, 0.0);
                let rotated = UnruhParams::new(
                    r,
                    base.q_right() * num_complex::Complex::from_polar(1.0, phase_r),
                    base.q_left() * num_complex::Complex::from_polar(1.0, phase_l),
                )
                .unwrap();
                for (a, b) in baseline.iter().zip(all_negativities(&rotated)) {
                    worst = worst.max((a - b).abs());
                }
            }
        }
    }
    CheckResult {
        name: "phase independence (10 random phase pairs)",
        deviation: worst,
    }
}

fn all_negativities(p: &UnruhParams<f64>) -> Vec<f64> {
    let mut out = Vec::with_capacity(18);
    for kind in StateKind::ALL {
        for pair in PAIRS {
            for det in DETECTORS {
                out.push(negativity_of(kind, p, pair, det));
            }
        }
    }
    out
}

/// Particle-sector alice-rob negativity never grows with acceleration;
/// antiparticle-sector alice-antirob negativity never shrinks.
fn sector_monotonicity() -> CheckResult {
    let mut worst = 0.0f64;
    for qa in [1.0, 0.9, 0.8, 0.71] {
        let mut prev_down = f64::INFINITY;
        let mut prev_up = -f64::INFINITY;
        for r in r_grid(200) {
            let p = params(r, qa, 0.0);
            let down = negativity_of(
                StateKind::PsiPlus,
                &p,
                ObserverPair::AliceRob,
                Detector::ParticleOnly,
            );
            let up = negativity_of(
                StateKind::PsiPlus,
                &p,
                ObserverPair::AliceAntiRob,
                Detector::AntiparticleOnly,
            );
            worst = worst.max(down - prev_down).max(prev_up - up);
            prev_down = down;
            prev_up = up;
        }
    }
    CheckResult {
        name: "sector monotonicity (200-point grid)",
        deviation: worst.max(0.0),
    }
}

/// Inertial, infinite-acceleration and equal-split endpoints.
fn limiting_values() -> CheckResult {
    let mut worst = 0.0f64;
    // Bell point
    for kind in [StateKind::PsiPlus, StateKind::PsiMinus] {
        let p = params(0.0, 1.0, 0.0);
        worst = worst
            .max((negativity_of(kind, &p, ObserverPair::AliceRob, Detector::Full) - 0.5).abs());
        worst = worst.max(negativity_of(
            kind,
            &p,
            ObserverPair::AliceAntiRob,
            Detector::Full,
        ));
    }
    // equal split of the surviving entanglement at infinite acceleration
    let p = params(FRAC_PI_4, 1.0, 0.0);
    let n_ar = negativity_of(
        StateKind::PsiPlus,
        &p,
        ObserverPair::AliceRob,
        Detector::Full,
    );
    let n_ab = negativity_of(
        StateKind::PsiPlus,
        &p,
        ObserverPair::AliceAntiRob,
        Detector::Full,
    );
    worst = worst.max((n_ar - n_ab).abs());
    worst = worst.max((n_ar - EQUAL_SPLIT_ENDPOINT).abs());
    // species-state survivors: ¼(|q_R|² − |q_L|²)
    for qa in [1.0f64, 0.9, 0.8, std::f64::consts::FRAC_1_SQRT_2] {
        let p = params(FRAC_PI_4, qa, 0.0);
        let expected = 0.25 * (2.0 * qa * qa - 1.0);
        for pair in PAIRS {
            let n = negativity_of(StateKind::PsiOne, &p, pair, Detector::Full);
            worst = worst.max((n - expected).abs());
        }
    }
    CheckResult {
        name: "inertial and infinite-acceleration limits",
        deviation: worst,
    }
}

/// Prints one line per check; returns true iff all deviations are within
/// `tolerance`.
pub fn report<W: std::io::Write>(
    writer: &mut W,
    results: &[CheckResult],
    tolerance: f64,
) -> std::io::Result<bool> {
    let mut all_pass = true;
    for (i, check) in results.iter().enumerate() {
        let pass = check.deviation <= tolerance;
        all_pass &= pass;
        writeln!(
            writer,
            "{:2}  {:<58} max dev {:>18}  {}",
            i + 1,
            check.name,
            sig12(check.deviation),
            if pass { "PASS" } else { "FAIL" },
        )?;
    }
    writeln!(
        writer,
        "{} checks, {} passed, tolerance {}",
        results.len(),
        results.iter().filter(|c| c.deviation <= tolerance).count(),
        sig12(tolerance),
    )?;
    Ok(all_pass)
}
