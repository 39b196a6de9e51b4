//! The symbolic question algebra.
//!
//! Questions about an `n`-gbit system are named by index tuples over
//! `{0, 1, 2, 3}`. Everything in this module is exact: compatibility is a
//! parity count, XNOR composition tracks its phase as a power of `i`, and no
//! floating point is involved.

mod closure;
mod compose;
mod frustration;
mod handedness;
mod index;
mod lattice;
mod set;

pub use closure::logical_closure;
pub use compose::{xnor_compose, Composition};
pub use frustration::{
    frustration_check, relation_over_individuals, Frustration, IndividualVariables, XorConstraint,
};
pub use handedness::{handedness_consistency, triple_is_consistent, GbitPair, Parity};
pub use index::{QuestionIndex, Sign, SignedQuestion};
pub use lattice::{build_lattice, QuestionGraph, Triangle};
pub use set::{enumerate_complete_set, is_mutually_compatible, QuestionSet};

use thiserror::Error;

use crate::system::GbitKind;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuestionError {
    #[error("a system needs at least one gbit")]
    EmptySystem,
    #[error("unknown gbit kind `{0}` (expected `qubit` or `rebit`)")]
    UnknownKind(String),
    #[error("invalid question digit `{0}` (expected 0-3)")]
    InvalidDigit(char),
    #[error("the all-zero index names no question")]
    NoQuestion,
    #[error("rebit question `{0}` has an odd number of 3s")]
    OddRebitThrees(String),
    #[error("questions act on {left} and {right} gbits")]
    LengthMismatch { left: usize, right: usize },
    #[error("questions belong to different kinds ({left} vs {right})")]
    KindMismatch { left: GbitKind, right: GbitKind },
    #[error("`{0}` and `{1}` are complementary; their XNOR is undefined")]
    CompositionUndefined(String, String),
    #[error("generators are logically inconsistent: `{0}` and its negation are both implied")]
    InconsistentGenerators(String),
    #[error("constraint {constraint} references variable {variable} but only {num_vars} exist")]
    MalformedConstraint {
        constraint: usize,
        variable: usize,
        num_vars: usize,
    },
    #[error("question `{0}` cannot be written over individual variables")]
    NotIndividualExpressible(String),
    #[error("malformed question set: {0}")]
    MalformedSet(String),
    #[error("parity missing for gbit pair ({0}, {1})")]
    MissingParity(usize, usize),
}
