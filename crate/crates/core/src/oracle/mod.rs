//! Matrix oracle: questions as projective measurements onto the `+1`
//! eigenspaces of Pauli strings.
//!
//! Pauli strings are built and multiplied with exact Gaussian-integer
//! arithmetic, independently of the symbolic rules in [`crate::question`].
//! Floating point enters only through density matrices.

mod cache;
mod density;
mod exact;

pub use cache::{cached_matrix_of, PauliCache, CACHE_MAX_GBITS};
pub use density::{
    bloch_to_density, born_probability, density_to_bloch, expectation, lueders_update, DensityMatrix,
    HERMITIAN_TOLERANCE, PSD_TOLERANCE,
};
pub use exact::{ExactMatrix, GaussInt};

use std::sync::atomic::{AtomicUsize, Ordering};

use num_complex::Complex;
use thiserror::Error;

use crate::question::{QuestionIndex, Sign};
use crate::system::GbitKind;

/// Default cap on gbit count for dense matrices (256 x 256).
pub const DEFAULT_MAX_GBITS: usize = 8;

static MAX_GBITS: AtomicUsize = AtomicUsize::new(DEFAULT_MAX_GBITS);

pub fn max_gbits() -> usize {
    MAX_GBITS.load(Ordering::Relaxed)
}

/// Sets the process-wide cap on dense matrix size.
pub fn set_max_gbits(n: usize) {
    MAX_GBITS.store(n, Ordering::Relaxed);
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OracleError {
    #[error("{n} gbits exceeds the dense-matrix cap of {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("rebit operator `{0}` must carry an even number of 3s")]
    OddRebitThrees(String),
    #[error("`{0}` and `{1}` do not commute; their product carries a phase of ±i")]
    NonCommuting(String, String),
    #[error("operators act on {left} and {right} gbits")]
    LengthMismatch { left: usize, right: usize },
    #[error("matrix is not Hermitian (deviation {0:e})")]
    NotHermitian(f64),
    #[error("matrix must be square with power-of-two dimension, got {rows}x{cols}")]
    BadShape { rows: usize, cols: usize },
    #[error("answer has zero probability ({0:e})")]
    ZeroProbability(f64),
    #[error("state has {got} components but the complete set has {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("density matrix does not map to a valid state: {0}")]
    InvalidState(String),
    #[error("product does not reduce to a single Pauli string")]
    NotAPauliString,
}

/// Matrix realization of a question, `i^phase · matrix`.
#[derive(Debug, Clone, PartialEq)]
pub struct PauliOperatorRep {
    pub index: QuestionIndex,
    pub matrix: ExactMatrix,
    /// Power of `i` in `{0, 1, 2, 3}`.
    pub phase: u8,
}

impl PauliOperatorRep {
    /// `i^phase · matrix` as a single exact matrix.
    pub fn phased_matrix(&self) -> ExactMatrix {
        self.matrix.scale(i_pow(self.phase))
    }

    /// JSON array of rows of `[re, im]` pairs.
    pub fn to_json(&self) -> serde_json::Value {
        let m = self.phased_matrix();
        let rows: Vec<Vec<[i32; 2]>> = (0..m.dim())
            .map(|r| (0..m.dim()).map(|c| [m.get(r, c).re, m.get(r, c).im]).collect())
            .collect();
        serde_json::json!({ "index": self.index, "phase": self.phase, "matrix": rows })
    }
}

pub(crate) fn i_pow(k: u8) -> GaussInt {
    match k % 4 {
        0 => Complex::new(1, 0),
        1 => Complex::new(0, 1),
        2 => Complex::new(-1, 0),
        _ => Complex::new(0, -1),
    }
}

/// Single-site matrix for a question digit.
///
/// Qubits: 1 → σx, 2 → σy, 3 → σz. Rebits: 1 → σx, 2 → σz, and 3 → σy, which
/// only ever appears in pairs.
fn site_matrix(kind: GbitKind, digit: u8) -> ExactMatrix {
    let (o, l, i) = (Complex::new(0, 0), Complex::new(1, 0), Complex::new(0, 1));
    let sx = ExactMatrix::from_rows(&[&[o, l], &[l, o]]);
    let sy = ExactMatrix::from_rows(&[&[o, -i], &[i, o]]);
    let sz = ExactMatrix::from_rows(&[&[l, o], &[o, -l]]);
    match (kind, digit) {
        (_, 0) => ExactMatrix::identity(2),
        (_, 1) => sx,
        (GbitKind::Qubit, 2) | (GbitKind::Rebit, 3) => sy,
        (GbitKind::Qubit, 3) | (GbitKind::Rebit, 2) => sz,
        _ => panic!("digit {digit} out of range"),
    }
}

fn check_size(n: usize) -> Result<(), OracleError> {
    let cap = max_gbits();
    if n > cap {
        return Err(OracleError::TooLarge { n, cap });
    }
    Ok(())
}

/// Kronecker product of site matrices for arbitrary digits, including the
/// all-zero identity.
pub fn pauli_string(kind: GbitKind, digits: &[u8]) -> Result<ExactMatrix, OracleError> {
    check_size(digits.len())?;
    if kind == GbitKind::Rebit && digits.iter().filter(|&&d| d == 3).count() % 2 == 1 {
        let name: String = digits.iter().map(|d| char::from(b'0' + d)).collect();
        return Err(OracleError::OddRebitThrees(name));
    }
    Ok(digits
        .iter()
        .map(|&d| site_matrix(kind, d))
        .reduce(|acc, m| acc.kron(&m))
        .unwrap_or_else(|| ExactMatrix::identity(1)))
}

pub fn matrix_of(q: &QuestionIndex) -> Result<PauliOperatorRep, OracleError> {
    Ok(PauliOperatorRep { index: q.clone(), matrix: pauli_string(q.kind(), q.digits())?, phase: 0 })
}

/// `m = i^phase · P(index)`, or `i^phase · I` when `index` is `None`.
#[derive(Debug, Clone, PartialEq)]
pub struct Decomposition {
    pub phase: u8,
    pub index: Option<QuestionIndex>,
}

/// Identifies `m` as a phased Pauli string by exhaustive Hilbert-Schmidt
/// projection onto every string of the kind.
///
/// Strings whose row-0 entry sits in a different column than that of `m`
/// cannot overlap with it and are skipped without being built.
pub fn decompose(kind: GbitKind, n: usize, m: &ExactMatrix) -> Result<Decomposition, OracleError> {
    check_size(n)?;
    let dim = 1i32 << n;
    let zero = Complex::new(0, 0);
    let Some(column) = (0..m.dim()).find(|&c| m.get(0, c) != zero) else {
        return Err(OracleError::NotAPauliString);
    };
    let flips: Vec<usize> = (0..4).map(|d| usize::from(site_matrix(kind, d).get(0, 1) != zero)).collect();
    let mut digits = vec![0u8; n];
    loop {
        let valid = kind == GbitKind::Qubit || digits.iter().filter(|&&d| d == 3).count() % 2 == 0;
        let row0 = digits.iter().fold(0, |acc, &d| (acc << 1) | flips[usize::from(d)]);
        if valid && row0 == column {
            let p = pauli_string(kind, &digits)?;
            let c = p.inner(m);
            if c != Complex::new(0, 0) {
                let phase = (0..4u8)
                    .find(|&k| i_pow(k) * dim == c)
                    .ok_or(OracleError::NotAPauliString)?;
                let index = digits
                    .iter()
                    .any(|&d| d != 0)
                    .then(|| QuestionIndex::new(kind, digits.clone()).expect("valid digits"));
                return Ok(Decomposition { phase, index });
            }
        }
        let mut pos = n;
        loop {
            if pos == 0 {
                return Err(OracleError::NotAPauliString);
            }
            pos -= 1;
            if digits[pos] < 3 {
                digits[pos] += 1;
                break;
            }
            digits[pos] = 0;
        }
    }
}

fn same_shape(q1: &QuestionIndex, q2: &QuestionIndex) -> Result<(), OracleError> {
    if q1.n() != q2.n() || q1.kind() != q2.kind() {
        return Err(OracleError::LengthMismatch { left: q1.n(), right: q2.n() });
    }
    Ok(())
}

/// Whether `P(q1) P(q2) = P(q2) P(q1)`, decided on exact matrices.
pub fn commutes(q1: &QuestionIndex, q2: &QuestionIndex) -> Result<bool, OracleError> {
    same_shape(q1, q2)?;
    let a = cached_matrix_of(q1)?;
    let b = cached_matrix_of(q2)?;
    Ok(&a.matrix * &b.matrix == &b.matrix * &a.matrix)
}

/// Exact product `P(q1) P(q2)` identified as a phased Pauli string.
pub fn product(q1: &QuestionIndex, q2: &QuestionIndex) -> Result<Decomposition, OracleError> {
    same_shape(q1, q2)?;
    let a = cached_matrix_of(q1)?;
    let b = cached_matrix_of(q2)?;
    decompose(q1.kind(), q1.n(), &(&a.matrix * &b.matrix))
}

/// The sign `s` in `P(q1) P(q2) = s · P(q3)` for commuting questions.
pub fn product_sign(q1: &QuestionIndex, q2: &QuestionIndex) -> Result<Sign, OracleError> {
    if !commutes(q1, q2)? {
        return Err(OracleError::NonCommuting(q1.to_string(), q2.to_string()));
    }
    match product(q1, q2)?.phase {
        0 => Ok(Sign::Plus),
        2 => Ok(Sign::Minus),
        _ => unreachable!("commuting Pauli strings have a real product"),
    }
}

/// All pairs commute, which for involutions is equivalent to a shared eigenbasis.
pub fn simultaneous_eigenbasis_exists(qs: &[QuestionIndex]) -> Result<bool, OracleError> {
    for (i, a) in qs.iter().enumerate() {
        for b in &qs[i + 1..] {
            if !commutes(a, b)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
