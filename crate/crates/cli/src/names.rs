//! Canonical command-line and CSV spellings of the enums.

use rindler::entanglement::{Detector, ObserverPair};
use rindler::states::StateKind;

pub fn state_name(kind: StateKind) -> &'static str {
    match kind {
        StateKind::PsiPlus => "psi-plus",
        StateKind::PsiMinus => "psi-minus",
        StateKind::PsiOne => "psi1",
    }
}

pub fn parse_state(s: &str) -> Result<StateKind, String> {
    match s {
        "psi-plus" => Ok(StateKind::PsiPlus),
        "psi-minus" => Ok(StateKind::PsiMinus),
        "psi1" => Ok(StateKind::PsiOne),
        other => Err(format!(
            "unknown state `{other}` (expected psi-plus, psi-minus or psi1)"
        )),
    }
}

pub fn pair_name(pair: ObserverPair) -> &'static str {
    match pair {
        ObserverPair::AliceRob => "alice-rob",
        ObserverPair::AliceAntiRob => "alice-antirob",
    }
}

pub fn parse_pair(s: &str) -> Result<ObserverPair, String> {
    match s {
        "alice-rob" => Ok(ObserverPair::AliceRob),
        "alice-antirob" => Ok(ObserverPair::AliceAntiRob),
        other => Err(format!(
            "unknown pair `{other}` (expected alice-rob or alice-antirob)"
        )),
    }
}

pub fn detector_name(detector: Detector) -> &'static str {
    match detector {
        Detector::Full => "full",
        Detector::ParticleOnly => "particle",
        Detector::AntiparticleOnly => "antiparticle",
    }
}

pub fn parse_detector(s: &str) -> Result<Detector, String> {
    match s {
        "full" => Ok(Detector::Full),
        "particle" => Ok(Detector::ParticleOnly),
        "antiparticle" => Ok(Detector::AntiparticleOnly),
        other => Err(format!(
            "unknown detector `{other}` (expected full, particle or antiparticle)"
        )),
    }
}

/// Stable ordering used as a CSV sort tiebreak.
pub fn pair_rank(pair: ObserverPair) -> u8 {
    match pair {
        ObserverPair::AliceRob => 0,
        ObserverPair::AliceAntiRob => 1,
    }
}

/// Stable ordering used as a CSV sort tiebreak.
pub fn detector_rank(detector: Detector) -> u8 {
    match detector {
        Detector::Full => 0,
        Detector::ParticleOnly => 1,
        Detector::AntiparticleOnly => 2,
    }
}
