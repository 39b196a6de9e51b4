use std::fmt;

use super::{QuestionError, QuestionIndex, Sign, SignedQuestion};
use crate::system::GbitKind;

/// Outcome of composing two signed questions with the XNOR.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Composition {
    Question(SignedQuestion),
    /// `Q ↔ Q`: carries no information.
    AlwaysTrue,
    /// `Q ↔ ¬Q`.
    AlwaysFalse,
}

impl Composition {
    pub fn question(&self) -> Option<&SignedQuestion> {
        match self {
            Composition::Question(s) => Some(s),
            _ => None,
        }
    }

    pub fn into_question(self) -> Option<SignedQuestion> {
        match self {
            Composition::Question(s) => Some(s),
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        !matches!(self, Composition::Question(_))
    }

    fn with_sign(self, sign: Sign) -> Self {
        match (self, sign) {
            (c, Sign::Plus) => c,
            (Composition::Question(s), Sign::Minus) => Composition::Question(-s),
            (Composition::AlwaysTrue, Sign::Minus) => Composition::AlwaysFalse,
            (Composition::AlwaysFalse, Sign::Minus) => Composition::AlwaysTrue,
        }
    }

    /// `self ↔ other`, where constants act as the identity (true) or negation (false).
    pub fn compose(&self, other: &Self) -> Result<Composition, QuestionError> {
        match (self, other) {
            (Composition::Question(a), Composition::Question(b)) => xnor_compose(a, b),
            (Composition::Question(a), c) | (c, Composition::Question(a)) => {
                let sign = if *c == Composition::AlwaysTrue { Sign::Plus } else { Sign::Minus };
                Ok(Composition::Question(a.clone()).with_sign(sign))
            }
            (a, b) => Ok(if a == b { Composition::AlwaysTrue } else { Composition::AlwaysFalse }),
        }
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Composition::Question(s) => write!(f, "{s}"),
            Composition::AlwaysTrue => f.write_str("TRUE"),
            Composition::AlwaysFalse => f.write_str("FALSE"),
        }
    }
}

/// Site-wise product of two digit strings, viewed as Pauli strings under the
/// kind's digit-to-letter map. Returns the accumulated phase as a power of `i`
/// (mod 4) and the product digits (possibly all zero).
pub(crate) fn symbolic_product(kind: GbitKind, a: &[u8], b: &[u8]) -> (u8, Vec<u8>) {
    let mut phase = 0u8;
    let digits = a
        .iter()
        .zip(b)
        .map(|(&da, &db)| {
            let (la, lb) = (kind.letter_of_digit(da), kind.letter_of_digit(db));
            let lc = match (la, lb) {
                (0, l) | (l, 0) => l,
                (x, y) if x == y => 0,
                (x, y) => {
                    // σ_x σ_y = i ε_xyz σ_z
                    let cyclic = matches!((x, y), (1, 2) | (2, 3) | (3, 1));
                    phase += if cyclic { 1 } else { 3 };
                    6 - x - y
                }
            };
            kind.digit_of_letter(lc)
        })
        .collect();
    (phase % 4, digits)
}

/// Composes `s1 ↔ s2`.
///
/// The result index is the site-wise composition (equal digits cancel, a zero
/// digit passes the other through, distinct non-zero digits give the third).
/// The result sign is `s1.sign · s2.sign · ε`, where `ε` is the sign of the
/// corresponding Pauli-string product. Only compatible questions compose.
pub fn xnor_compose(s1: &SignedQuestion, s2: &SignedQuestion) -> Result<Composition, QuestionError> {
    let (q1, q2) = (&s1.index, &s2.index);
    if !q1.is_compatible(q2)? {
        return Err(QuestionError::CompositionUndefined(q1.to_string(), q2.to_string()));
    }
    let (phase, digits) = symbolic_product(q1.kind(), q1.digits(), q2.digits());
    // Commuting Pauli strings multiply to a real multiple of a Pauli string.
    assert!(phase % 2 == 0, "compatible questions produced an imaginary phase");
    let parity = Sign::from_bool(phase == 2);
    let sign = s1.sign * s2.sign * parity;
    let base = if digits.iter().all(|&d| d == 0) {
        Composition::AlwaysTrue
    } else {
        Composition::Question(QuestionIndex::from_raw(q1.kind(), digits).positive())
    };
    Ok(base.with_sign(sign))
}
