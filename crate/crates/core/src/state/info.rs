use serde::{Deserialize, Serialize};

use super::{BlochState, StateError};

/// Tolerance for the pure and totally-mixed classes.
pub const CLASSIFY_TOLERANCE: f64 = 1e-9;
/// Information above the maximum by more than this marks an invalid state.
pub const EXCESS_TOLERANCE: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum InfoClassification {
    Pure,
    Mixed,
    TotallyMixed,
}

/// Information carried by one question answered yes with probability `y`:
/// `(2y - 1)^2` bits.
pub fn information_single(y: f64) -> Result<f64, StateError> {
    if !(0.0..=1.0).contains(&y) {
        return Err(StateError::ProbabilityOutOfRange { component: 0, value: y, presence: 1.0 });
    }
    Ok((2.0 * y - 1.0).powi(2))
}

/// Per-question information `α_i = r_i^2` with `r = 2y - p`.
pub fn question_informations(state: &BlochState) -> Vec<f64> {
    state.bloch_vector().into_iter().map(|r| r * r).collect()
}

/// Total information: the squared length of the Bloch vector.
pub fn information_total(state: &BlochState) -> f64 {
    question_informations(state).into_iter().sum()
}

pub fn classify(state: &BlochState) -> Result<InfoClassification, StateError> {
    if (state.presence() - 1.0).abs() > 1e-12 {
        return Err(StateError::NotNormalized(state.presence()));
    }
    let info = information_total(state);
    let max = state.system().max_information();
    if info > max + EXCESS_TOLERANCE {
        return Err(StateError::ExceedsMaximalInformation { info, max });
    }
    Ok(if (info - max).abs() <= CLASSIFY_TOLERANCE {
        InfoClassification::Pure
    } else if info <= CLASSIFY_TOLERANCE {
        InfoClassification::TotallyMixed
    } else {
        InfoClassification::Mixed
    })
}

/// `λ s1 + (1 - λ) s2`, componentwise on `y` and `p`.
pub fn convex_mix(lambda: f64, s1: &BlochState, s2: &BlochState) -> Result<BlochState, StateError> {
    if !(0.0..=1.0).contains(&lambda) {
        return Err(StateError::WeightOutOfRange(lambda));
    }
    if s1.system() != s2.system() {
        return Err(StateError::SystemMismatch);
    }
    let y = s1.y().iter().zip(s2.y()).map(|(a, b)| lambda * a + (1.0 - lambda) * b).collect();
    let p = lambda * s1.presence() + (1.0 - lambda) * s2.presence();
    BlochState::new(s1.system(), y, p)
}
