//! Stochastic interrogation of prepared systems.
//!
//! Answers are sampled with the Born rule and the state is updated with the
//! Lüders rule after each answer. All randomness flows through per-shot
//! ChaCha8 streams (see [`shot_rng`]), so every result is reproducible from
//! its seed regardless of how shots are scheduled across threads.

mod axioms;
mod interrogation;
mod preparation;
mod rng;
mod scenario;
mod tomography;

pub use axioms::{validate_axioms, AxiomCheck, AxiomReport};
pub use interrogation::{run_shots, run_single_shot, sample_answers, AnswerRecord, Interrogation, TranscriptRecord};
pub use preparation::Preparation;
pub use rng::{derive_seed, shot_rng, splitmix64, ShotRng};
pub use scenario::{Scenario, ScenarioOutcome, TomographySpec};
pub use tomography::{run_tomography, QuestionEstimate, TomographyReport, TomographySchedule};

use thiserror::Error;

use crate::oracle::OracleError;
use crate::question::QuestionError;
use crate::state::StateError;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SimError {
    #[error("question `{question}` does not belong to a {expected} system")]
    ForeignQuestion { question: String, expected: String },
    #[error("preparation acts on dimension {got}, system needs {expected}")]
    PreparationDimension { expected: usize, got: usize },
    #[error("preparation: {0}")]
    Preparation(String),
    #[error("tomography needs at least one question")]
    EmptyQuestionSet,
    #[error("shot count must be at least 1")]
    NoShots,
    #[error(transparent)]
    Question(#[from] QuestionError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    State(#[from] StateError),
}
