use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::QuestionError;

/// Correlation parity of a closed triple: `Q = Q' ↔ Q''` (even) or
/// `Q = ¬(Q' ↔ Q'')` (odd).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    pub fn color(self) -> &'static str {
        match self {
            Parity::Even => "green",
            Parity::Odd => "red",
        }
    }
}

/// Unordered pair of gbits, stored with `first < second`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GbitPair(usize, usize);

impl GbitPair {
    pub fn new(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "a pair needs two distinct gbits");
        Self(a.min(b), a.max(b))
    }

    pub fn first(&self) -> usize {
        self.0
    }

    pub fn second(&self) -> usize {
        self.1
    }
}

/// Parities of the three pairs in a gbit triple are consistent iff an odd
/// number of them is odd.
pub fn triple_is_consistent(ab: Parity, ac: Parity, bc: Parity) -> bool {
    [ab, ac, bc].iter().filter(|p| p.is_odd()).count() % 2 == 1
}

/// Checks every gbit triple among `n` gbits.
///
/// Here a pair's parity is that of its `Q_33 = (¬)(Q_11 ↔ Q_22)` triangle.
pub fn handedness_consistency(n: usize, parities: &BTreeMap<GbitPair, Parity>) -> Result<bool, QuestionError> {
    let get = |a: usize, b: usize| parities.get(&GbitPair::new(a, b)).copied().ok_or(QuestionError::MissingParity(a, b));
    for a in 0..n {
        for b in a + 1..n {
            get(a, b)?;
        }
    }
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if !triple_is_consistent(get(a, b)?, get(a, c)?, get(b, c)?) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}
