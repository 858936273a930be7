//! Parameter sweeps over the acceleration parameter, emitted as CSV.
//!
//! One sweep covers a single state kind, a list of |q_R| values, a common
//! q-phase, an r grid over [0, π/4] and any set of observer pairs and
//! detector filters. Output ordering and float formatting are fixed, so a
//! given configuration always produces a byte-identical file.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use rindler::entanglement::{negativity_of, Detector, ObserverPair};
use rindler::states::StateKind;
use rindler::unruh::UnruhParams;

use crate::names::{detector_name, detector_rank, pair_name, pair_rank, state_name};
use crate::output::sig12;
use crate::CliError;

pub const CSV_HEADER: &str = "state,q_r_abs,q_phase,r_omega,pair,detector,negativity";

#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub state: Option<StateKind>,
    pub q_r_values: Vec<f64>,
    pub q_phase: f64,
    pub points: usize,
    pub pairs: Vec<ObserverPair>,
    pub detectors: Vec<Detector>,
    pub output: Option<PathBuf>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            state: None,
            q_r_values: Vec::new(),
            q_phase: 0.0,
            points: 200,
            pairs: vec![ObserverPair::AliceRob, ObserverPair::AliceAntiRob],
            detectors: vec![Detector::Full],
            output: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub state: StateKind,
    pub q_r_abs: f64,
    pub q_phase: f64,
    pub r: f64,
    pub pair: ObserverPair,
    pub detector: Detector,
    pub negativity: f64,
}

/// Strictly increasing grid of `points` values covering [0, π/4].
pub fn r_grid(points: usize) -> Vec<f64> {
    if points == 1 {
        return vec![0.0];
    }
    (0..points)
        .map(|i| std::f64::consts::FRAC_PI_4 * (i as f64 / (points - 1) as f64))
        .collect()
}

/// Evaluates the whole sweep. Rows come back already in output order:
/// (state, |q_R| descending, r ascending, pair, detector).
pub fn compute_rows(config: &SweepConfig) -> Result<Vec<SweepRow>, CliError> {
    if config.points == 0 {
        return Err(CliError::Domain("--points must be at least 1".to_string()));
    }
    for &qa in &config.q_r_values {
        if !(0.0..=1.0).contains(&qa) {
            return Err(CliError::Domain(format!(
                "--qr value {qa} is outside [0, 1]"
            )));
        }
    }
    if config.q_r_values.is_empty() {
        return Ok(Vec::new());
    }
    let Some(state) = config.state else {
        return Err(CliError::Domain(
            "--state is required for a non-empty sweep".to_string(),
        ));
    };
    let grid = r_grid(config.points);
    let mut rows = Vec::with_capacity(
        config.q_r_values.len() * grid.len() * config.pairs.len() * config.detectors.len(),
    );
    for &qa in &config.q_r_values {
        for &r in &grid {
            let params = UnruhParams::from_modulus(r, qa, config.q_phase)
                .map_err(|e| CliError::Domain(e.to_string()))?;
            for &pair in &config.pairs {
                for &detector in &config.detectors {
                    rows.push(SweepRow {
                        state,
                        q_r_abs: qa,
                        q_phase: config.q_phase,
                        r,
                        pair,
                        detector,
                        negativity: negativity_of(state, &params, pair, detector),
                    });
                }
            }
        }
    }
    sort_rows(&mut rows);
    Ok(rows)
}

/// Output order imposed at write time, so rows computed in any order end up
/// in the same file.
pub fn sort_rows(rows: &mut [SweepRow]) {
    rows.sort_by(|a, b| {
        state_name(a.state)
            .cmp(state_name(b.state))
            .then(b.q_r_abs.total_cmp(&a.q_r_abs))
            .then(a.r.total_cmp(&b.r))
            .then(pair_rank(a.pair).cmp(&pair_rank(b.pair)))
            .then(detector_rank(a.detector).cmp(&detector_rank(b.detector)))
    });
}

/// UTF-8, LF line endings, floats with 12 significant digits.
pub fn write_csv<W: Write>(writer: &mut W, rows: &[SweepRow]) -> std::io::Result<()> {
    writer.write_all(CSV_HEADER.as_bytes())?;
    writer.write_all(b"\n")?;
    for row in rows {
        let line = format!(
            "{},{},{},{},{},{},{}\n",
            state_name(row.state),
            sig12(row.q_r_abs),
            sig12(row.q_phase),
            sig12(row.r),
            pair_name(row.pair),
            detector_name(row.detector),
            sig12(row.negativity),
        );
        writer.write_all(line.as_bytes())?;
    }
    Ok(())
}

/// Computes the sweep and writes it to the configured output path.
pub fn run(config: &SweepConfig) -> Result<(), CliError> {
    let Some(path) = &config.output else {
        return Err(CliError::Domain("--output is required".to_string()));
    };
    let rows = compute_rows(config)?;
    let file = fs::File::create(path)
        .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))?;
    let mut writer = std::io::BufWriter::new(file);
    write_csv(&mut writer, &rows)
        .and_then(|()| writer.flush())
        .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))?;
    Ok(())
}
