use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use serde::{Deserialize, Serialize};

use super::StateError;
use crate::question::{enumerate_complete_set, QuestionIndex, QuestionSet};
use crate::system::{GbitKind, SystemKind};

/// Slack accepted on `0 <= y_i <= p` before clamping.
const RANGE_TOLERANCE: f64 = 1e-9;

fn shared_complete_set(sys: SystemKind) -> Arc<QuestionSet> {
    static SETS: OnceLock<RwLock<HashMap<SystemKind, Arc<QuestionSet>>>> = OnceLock::new();
    let sets = SETS.get_or_init(Default::default);
    if let Some(set) = sets.read().expect("poisoned").get(&sys) {
        return Arc::clone(set);
    }
    let set = Arc::new(enumerate_complete_set(sys));
    Arc::clone(sets.write().expect("poisoned").entry(sys).or_insert(set))
}

/// Yes-probabilities over the complete question set, plus the presence
/// probability `p` of the system.
///
/// The no-vector is implied by `y + n = p`, so only `y` is stored.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(try_from = "BlochStateJson", into = "BlochStateJson")]
pub struct BlochState {
    sys: SystemKind,
    questions: Arc<QuestionSet>,
    y: Vec<f64>,
    p: f64,
}

#[derive(Serialize, Deserialize)]
struct BlochStateJson {
    kind: GbitKind,
    n: usize,
    p: f64,
    y: Vec<f64>,
}

impl TryFrom<BlochStateJson> for BlochState {
    type Error = StateError;

    fn try_from(raw: BlochStateJson) -> Result<Self, Self::Error> {
        let sys = SystemKind::new(raw.kind, raw.n).map_err(|e| StateError::Invalid(e.to_string()))?;
        BlochState::new(sys, raw.y, raw.p)
    }
}

impl From<BlochState> for BlochStateJson {
    fn from(s: BlochState) -> Self {
        BlochStateJson { kind: s.sys.kind, n: s.sys.n, p: s.p, y: s.y }
    }
}

impl PartialEq for BlochState {
    fn eq(&self, other: &Self) -> bool {
        self.sys == other.sys && self.p == other.p && self.y == other.y
    }
}

impl BlochState {
    pub fn new(sys: SystemKind, mut y: Vec<f64>, p: f64) -> Result<Self, StateError> {
        if !(0.0..=1.0).contains(&p) {
            return Err(StateError::PresenceOutOfRange(p));
        }
        let expected = sys.complete_set_size();
        if y.len() != expected {
            return Err(StateError::DimensionMismatch { expected, got: y.len() });
        }
        for (i, yi) in y.iter_mut().enumerate() {
            if !(-RANGE_TOLERANCE..=p + RANGE_TOLERANCE).contains(yi) {
                return Err(StateError::ProbabilityOutOfRange { component: i, value: *yi, presence: p });
            }
            *yi = yi.clamp(0.0, p);
        }
        Ok(Self { sys, questions: shared_complete_set(sys), y, p })
    }

    /// From the generalized Bloch vector `r = 2y - p`.
    pub fn from_bloch_vector(sys: SystemKind, r: Vec<f64>, p: f64) -> Result<Self, StateError> {
        let y = r.into_iter().map(|ri| 0.5 * (ri + p)).collect();
        Self::new(sys, y, p)
    }

    /// `y_i = 1/2` for every question.
    pub fn no_information(sys: SystemKind) -> Self {
        Self::new(sys, vec![0.5; sys.complete_set_size()], 1.0).expect("valid")
    }

    pub fn system(&self) -> SystemKind {
        self.sys
    }

    pub fn questions(&self) -> &QuestionSet {
        &self.questions
    }

    pub fn y(&self) -> &[f64] {
        &self.y
    }

    pub fn presence(&self) -> f64 {
        self.p
    }

    /// `r_i = y_i - n_i = 2 y_i - p`.
    pub fn bloch_vector(&self) -> Vec<f64> {
        self.y.iter().map(|&yi| 2.0 * yi - self.p).collect()
    }

    pub fn probability_of(&self, q: &QuestionIndex) -> Option<f64> {
        self.questions.position(q).map(|i| self.y[i])
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("states serialize")
    }
}
