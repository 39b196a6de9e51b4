//! System descriptors: which kind of generalized bit, and how many of them.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::question::QuestionError;

/// The two admissible single-gbit question structures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GbitKind {
    /// Three pairwise complementary individual questions per gbit.
    Qubit,
    /// Two pairwise complementary individual questions per gbit.
    Rebit,
}

impl GbitKind {
    /// Number of independent individual questions for a single gbit.
    pub fn single_dimension(self) -> usize {
        match self {
            GbitKind::Qubit => 3,
            GbitKind::Rebit => 2,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            GbitKind::Qubit => "qubit",
            GbitKind::Rebit => "rebit",
        }
    }

    /// Pauli letter (1 = x, 2 = y, 3 = z) carried by a question digit.
    ///
    /// Qubits use the identity map. Rebits ask σx and σz individually, and the
    /// digit 3 only appears in pairs where it stands for σy ⊗ σy.
    pub(crate) fn letter_of_digit(self, digit: u8) -> u8 {
        match (self, digit) {
            (_, 0) => 0,
            (GbitKind::Qubit, d) => d,
            (GbitKind::Rebit, 1) => 1,
            (GbitKind::Rebit, 2) => 3,
            (GbitKind::Rebit, 3) => 2,
            _ => unreachable!("digit out of range"),
        }
    }

    pub(crate) fn digit_of_letter(self, letter: u8) -> u8 {
        // The rebit map is an involution on {1, 2, 3}.
        self.letter_of_digit(letter)
    }
}

impl fmt::Display for GbitKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for GbitKind {
    type Err = QuestionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "qubit" => Ok(GbitKind::Qubit),
            "rebit" => Ok(GbitKind::Rebit),
            other => Err(QuestionError::UnknownKind(other.to_string())),
        }
    }
}

/// A composite system of `n` gbits of one kind.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SystemKind {
    pub kind: GbitKind,
    pub n: usize,
}

impl SystemKind {
    pub fn new(kind: GbitKind, n: usize) -> Result<Self, QuestionError> {
        if n == 0 {
            return Err(QuestionError::EmptySystem);
        }
        Ok(Self { kind, n })
    }

    pub fn qubits(n: usize) -> Self {
        Self::new(GbitKind::Qubit, n).expect("n must be positive")
    }

    pub fn rebits(n: usize) -> Self {
        Self::new(GbitKind::Rebit, n).expect("n must be positive")
    }

    /// Size of the informationally complete question set.
    ///
    /// `4^n - 1` for qubits and `2^(n-1) (2^n + 1) - 1` for rebits.
    pub fn complete_set_size(&self) -> usize {
        match self.kind {
            GbitKind::Qubit => (1usize << (2 * self.n)) - 1,
            GbitKind::Rebit => (1usize << (self.n - 1)) * ((1usize << self.n) + 1) - 1,
        }
    }

    /// Hilbert-space dimension `2^n` of the matrix realization.
    pub fn hilbert_dimension(&self) -> usize {
        1usize << self.n
    }

    /// Maximal total information `2^n - 1` bits, reached exactly by pure states.
    pub fn max_information(&self) -> f64 {
        (self.hilbert_dimension() - 1) as f64
    }
}

impl fmt::Display for SystemKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} x{}", self.kind, self.n)
    }
}
