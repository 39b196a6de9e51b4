//! Reconstruction toolbox for N-qubit and N-rebit systems.
//!
//! * [`question`]: the exact question algebra (indices, compatibility, XNOR
//!   composition, complete sets, lattices, frustration and handedness checks).
//! * [`oracle`]: Pauli-string matrices, Born rule and Lüders update, used as
//!   ground truth for the symbolic rules.
//! * [`state`]: Bloch-vector states, the quadratic information measure,
//!   evolution and entanglement measures.
//! * [`sim`]: seeded interrogation, tomography and axiom checks.

pub mod oracle;
pub mod question;
pub mod random;
pub mod sim;
pub mod state;
pub mod system;
pub mod verify;
pub mod cli;

pub use system::{GbitKind, SystemKind};
