use serde::{Deserialize, Serialize};

use super::{QuestionError, QuestionIndex};
use crate::system::{GbitKind, SystemKind};

/// An ordered set of distinct questions about one system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuestionSet {
    system: SystemKind,
    members: Vec<QuestionIndex>,
}

#[derive(Serialize, Deserialize)]
struct QuestionSetJson {
    kind: GbitKind,
    n: usize,
    indices: Vec<String>,
}

impl QuestionSet {
    /// Sorts and deduplicates `members`.
    pub fn new(system: SystemKind, mut members: Vec<QuestionIndex>) -> Result<Self, QuestionError> {
        for q in &members {
            if q.kind() != system.kind {
                return Err(QuestionError::KindMismatch { left: system.kind, right: q.kind() });
            }
            if q.n() != system.n {
                return Err(QuestionError::LengthMismatch { left: system.n, right: q.n() });
            }
        }
        members.sort();
        members.dedup();
        Ok(Self { system, members })
    }

    pub fn system(&self) -> SystemKind {
        self.system
    }

    pub fn members(&self) -> &[QuestionIndex] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, QuestionIndex> {
        self.members.iter()
    }

    /// Position of `q` in the set, if present.
    pub fn position(&self, q: &QuestionIndex) -> Option<usize> {
        self.members.binary_search(q).ok()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(QuestionSetJson {
            kind: self.system.kind,
            n: self.system.n,
            indices: self.members.iter().map(ToString::to_string).collect(),
        })
        .expect("question sets serialize")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self, QuestionError> {
        let raw: QuestionSetJson = serde_json::from_value(value.clone())
            .map_err(|e| QuestionError::MalformedSet(e.to_string()))?;
        let system = SystemKind::new(raw.kind, raw.n)?;
        let members = raw
            .indices
            .iter()
            .map(|s| QuestionIndex::parse(raw.kind, s))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(system, members)
    }
}

impl<'a> IntoIterator for &'a QuestionSet {
    type Item = &'a QuestionIndex;
    type IntoIter = std::slice::Iter<'a, QuestionIndex>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

/// All questions of the informationally complete set, in lexicographic order.
pub fn enumerate_complete_set(sys: SystemKind) -> QuestionSet {
    let mut members = Vec::with_capacity(sys.complete_set_size());
    let mut digits = vec![0u8; sys.n];
    loop {
        // odometer increment, last digit fastest
        let mut pos = sys.n;
        loop {
            if pos == 0 {
                return QuestionSet { system: sys, members };
            }
            pos -= 1;
            if digits[pos] < 3 {
                digits[pos] += 1;
                break;
            }
            digits[pos] = 0;
        }
        let threes = digits.iter().filter(|&&d| d == 3).count();
        if sys.kind == GbitKind::Rebit && threes % 2 == 1 {
            continue;
        }
        members.push(QuestionIndex::from_raw(sys.kind, digits.clone()));
    }
}

/// Pairwise compatibility of every pair in `qs`. For pairwise independent
/// binary questions this is equivalent to mutual compatibility.
pub fn is_mutually_compatible(qs: &[QuestionIndex]) -> Result<bool, QuestionError> {
    for (i, a) in qs.iter().enumerate() {
        for b in &qs[i + 1..] {
            if !a.is_compatible(b)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
