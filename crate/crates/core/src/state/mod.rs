//! Bloch-vector states, the quadratic information measure, evolution and
//! entanglement measures.

mod bloch;
mod entanglement;
mod evolution;
mod info;

pub use bloch::BlochState;
pub use entanglement::{
    composite_information, entanglement_class, support_information, tangles, tangles_about, EntanglementClass,
    Tangles, CLASSICAL_COMPOSITE_BOUND,
};
pub use evolution::{
    evolve, induced_bloch_map, rotation_from_antisymmetric, unitary_from_hermitian, EvolutionGenerator,
};
pub use info::{
    classify, convex_mix, information_single, information_total, question_informations, InfoClassification,
    CLASSIFY_TOLERANCE, EXCESS_TOLERANCE,
};

use thiserror::Error;

use crate::oracle::OracleError;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum StateError {
    #[error("presence probability {0} outside [0, 1]")]
    PresenceOutOfRange(f64),
    #[error("component {component} = {value} outside [0, {presence}]")]
    ProbabilityOutOfRange { component: usize, value: f64, presence: f64 },
    #[error("expected {expected} components, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("states belong to different systems")]
    SystemMismatch,
    #[error("mixing weight {0} outside [0, 1]")]
    WeightOutOfRange(f64),
    #[error("classification needs p = 1, got {0}")]
    NotNormalized(f64),
    #[error("information {info} exceeds the maximum {max}")]
    ExceedsMaximalInformation { info: f64, max: f64 },
    #[error("generator is not antisymmetric (deviation {0:e})")]
    NotAntisymmetric(f64),
    #[error("Hamiltonian is not Hermitian (deviation {0:e})")]
    NotHermitian(f64),
    #[error("rebit Hamiltonian must be purely imaginary (real part {0:e})")]
    NotRebitGenerator(f64),
    #[error("invalid bipartition mask {0:#b}")]
    InvalidBipartition(u64),
    #[error("needs {expected} gbits, got {got}")]
    WrongGbitCount { expected: usize, got: usize },
    #[error("invalid state: {0}")]
    Invalid(String),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}
