use std::fmt;
use std::ops::Neg;

use serde::{Serialize, Serializer};

use super::QuestionError;
use crate::system::{GbitKind, SystemKind};

/// Name of one question `Q_{μ1…μn}` of the informationally complete set.
///
/// Digit `μ_a` is the individual question index for gbit `a`, with `0`
/// meaning gbit `a` is not involved. Ordering is lexicographic on the digits.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QuestionIndex {
    kind: GbitKind,
    digits: Vec<u8>,
}

impl QuestionIndex {
    pub fn new(kind: GbitKind, digits: impl Into<Vec<u8>>) -> Result<Self, QuestionError> {
        let digits = digits.into();
        if digits.is_empty() {
            return Err(QuestionError::EmptySystem);
        }
        if let Some(&d) = digits.iter().find(|&&d| d > 3) {
            return Err(QuestionError::InvalidDigit(char::from(b'0' + d.min(9))));
        }
        if digits.iter().all(|&d| d == 0) {
            return Err(QuestionError::NoQuestion);
        }
        let index = Self { kind, digits };
        if kind == GbitKind::Rebit && index.count_threes() % 2 == 1 {
            return Err(QuestionError::OddRebitThrees(index.to_string()));
        }
        Ok(index)
    }

    pub fn qubit(digits: impl Into<Vec<u8>>) -> Result<Self, QuestionError> {
        Self::new(GbitKind::Qubit, digits)
    }

    pub fn rebit(digits: impl Into<Vec<u8>>) -> Result<Self, QuestionError> {
        Self::new(GbitKind::Rebit, digits)
    }

    /// Parses a digit string such as `"102"`.
    pub fn parse(kind: GbitKind, s: &str) -> Result<Self, QuestionError> {
        let digits = s
            .trim()
            .chars()
            .map(|c| match c {
                '0'..='3' => Ok(c as u8 - b'0'),
                other => Err(QuestionError::InvalidDigit(other)),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(kind, digits)
    }

    /// Individual question `digit` on gbit `gbit` of an `n`-gbit system.
    pub fn individual(kind: GbitKind, n: usize, gbit: usize, digit: u8) -> Result<Self, QuestionError> {
        let mut digits = vec![0; n];
        if gbit >= n {
            return Err(QuestionError::LengthMismatch { left: n, right: gbit + 1 });
        }
        digits[gbit] = digit;
        Self::new(kind, digits)
    }

    /// Builds an index without validation. Callers guarantee the invariants.
    pub(crate) fn from_raw(kind: GbitKind, digits: Vec<u8>) -> Self {
        debug_assert!(digits.iter().any(|&d| d != 0));
        Self { kind, digits }
    }

    pub fn kind(&self) -> GbitKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.digits.len()
    }

    pub fn system(&self) -> SystemKind {
        SystemKind { kind: self.kind, n: self.digits.len() }
    }

    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    /// Number of gbits the question involves.
    pub fn weight(&self) -> usize {
        self.digits.iter().filter(|&&d| d != 0).count()
    }

    /// Bit mask of the gbits the question involves (gbit 0 is the lowest bit).
    pub fn support(&self) -> u64 {
        self.digits
            .iter()
            .enumerate()
            .filter(|(_, &d)| d != 0)
            .fold(0, |mask, (a, _)| mask | (1 << a))
    }

    pub(crate) fn count_threes(&self) -> usize {
        self.digits.iter().filter(|&&d| d == 3).count()
    }

    fn check_same_system(&self, other: &Self) -> Result<(), QuestionError> {
        if self.kind != other.kind {
            return Err(QuestionError::KindMismatch { left: self.kind, right: other.kind });
        }
        if self.digits.len() != other.digits.len() {
            return Err(QuestionError::LengthMismatch {
                left: self.digits.len(),
                right: other.digits.len(),
            });
        }
        Ok(())
    }

    /// Number of gbits on which both questions ask a non-trivial but different
    /// individual question.
    fn disagreements(&self, other: &Self) -> usize {
        self.digits
            .iter()
            .zip(&other.digits)
            .filter(|(&a, &b)| a != 0 && b != 0 && a != b)
            .count()
    }

    /// Compatible iff the indices disagree on an even number of positions where
    /// both are non-zero.
    pub fn is_compatible(&self, other: &Self) -> Result<bool, QuestionError> {
        self.check_same_system(other)?;
        Ok(self.disagreements(other).is_multiple_of(2))
    }

    pub fn is_complementary(&self, other: &Self) -> Result<bool, QuestionError> {
        Ok(self != other && !self.is_compatible(other)?)
    }

    pub fn positive(self) -> SignedQuestion {
        SignedQuestion::new(self, Sign::Plus)
    }

    pub fn negative(self) -> SignedQuestion {
        SignedQuestion::new(self, Sign::Minus)
    }
}

impl fmt::Display for QuestionIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in &self.digits {
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl Serialize for QuestionIndex {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Relative sign of a question: `Minus` denotes the negation `¬Q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_bool(negated: bool) -> Self {
        if negated {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn is_minus(self) -> bool {
        self == Sign::Minus
    }

    pub fn value(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        Sign::from_bool(self.is_minus() != rhs.is_minus())
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        Sign::from_bool(!self.is_minus())
    }
}

/// A question or its negation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedQuestion {
    pub index: QuestionIndex,
    pub sign: Sign,
}

impl SignedQuestion {
    pub fn new(index: QuestionIndex, sign: Sign) -> Self {
        Self { index, sign }
    }

    /// Parses `"12"` or `"!12"`.
    pub fn parse(kind: GbitKind, s: &str) -> Result<Self, QuestionError> {
        let s = s.trim();
        match s.strip_prefix('!') {
            Some(rest) => Ok(QuestionIndex::parse(kind, rest)?.negative()),
            None => Ok(QuestionIndex::parse(kind, s)?.positive()),
        }
    }
}

impl Neg for SignedQuestion {
    type Output = SignedQuestion;

    fn neg(self) -> SignedQuestion {
        SignedQuestion { index: self.index, sign: -self.sign }
    }
}

impl fmt::Display for SignedQuestion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign.is_minus() {
            f.write_str("!")?;
        }
        write!(f, "{}", self.index)
    }
}

impl Serialize for SignedQuestion {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
