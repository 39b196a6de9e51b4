//! Consistency of hypothetical definite answers, as a linear system over GF(2).

use std::collections::BTreeSet;

use fixedbitset::FixedBitSet;

use super::{QuestionError, SignedQuestion};
use crate::system::{GbitKind, SystemKind};

/// `x_{v1} ⊕ x_{v2} ⊕ … = rhs` over binary variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XorConstraint {
    pub vars: Vec<usize>,
    pub rhs: bool,
}

impl XorConstraint {
    pub fn xor(vars: impl Into<Vec<usize>>, rhs: bool) -> Self {
        Self { vars: vars.into(), rhs }
    }

    /// `x_{v1} ↔ x_{v2} ↔ … ↔ x_{vk} = value`.
    ///
    /// A chain of `k` XNORs equals the XOR of its arguments flipped `k - 1` times.
    pub fn xnor_chain(vars: impl Into<Vec<usize>>, value: bool) -> Self {
        let vars = vars.into();
        let flips = vars.len().saturating_sub(1) % 2 == 1;
        Self { vars, rhs: value ^ flips }
    }

    pub fn is_satisfied_by(&self, assignment: &[bool]) -> bool {
        self.vars.iter().fold(false, |acc, &v| acc ^ assignment[v]) == self.rhs
    }
}

/// Result of [`frustration_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Frustration {
    /// A global assignment satisfying every constraint.
    Satisfiable { witness: Vec<bool> },
    /// Indices of constraints whose sum reduces to `0 = 1`.
    Frustrated { inconsistent: Vec<usize> },
}

impl Frustration {
    pub fn is_satisfiable(&self) -> bool {
        matches!(self, Frustration::Satisfiable { .. })
    }
}

/// Gauss-Jordan elimination over GF(2).
pub fn frustration_check(constraints: &[XorConstraint], num_vars: usize) -> Result<Frustration, QuestionError> {
    let m = constraints.len();
    let width = num_vars + 1;
    let mut rows = Vec::with_capacity(m);
    let mut provenance = Vec::with_capacity(m);
    for (i, c) in constraints.iter().enumerate() {
        let mut row = FixedBitSet::with_capacity(width);
        for &v in &c.vars {
            if v >= num_vars {
                return Err(QuestionError::MalformedConstraint { constraint: i, variable: v, num_vars });
            }
            row.toggle(v);
        }
        row.set(num_vars, c.rhs);
        rows.push(row);
        let mut from = FixedBitSet::with_capacity(m);
        from.insert(i);
        provenance.push(from);
    }

    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..num_vars {
        let Some(p) = (rank..m).find(|&r| rows[r].contains(col)) else {
            continue;
        };
        rows.swap(rank, p);
        provenance.swap(rank, p);
        let (pivot_row, pivot_from) = (rows[rank].clone(), provenance[rank].clone());
        for r in 0..m {
            if r != rank && rows[r].contains(col) {
                rows[r].symmetric_difference_with(&pivot_row);
                provenance[r].symmetric_difference_with(&pivot_from);
            }
        }
        pivots.push(col);
        rank += 1;
    }

    // Rows past the rank have no variables left; a set rhs there is 0 = 1.
    if let Some(r) = (rank..m).find(|&r| rows[r].contains(num_vars)) {
        return Ok(Frustration::Frustrated { inconsistent: provenance[r].ones().collect() });
    }

    let mut witness = vec![false; num_vars];
    for (r, &col) in pivots.iter().enumerate() {
        witness[col] = rows[r].contains(num_vars);
    }
    Ok(Frustration::Satisfiable { witness })
}

/// Numbering of hypothetical definite values of every individual question:
/// variable `gbit · D_1 + (digit - 1)`.
#[derive(Debug, Clone, Copy)]
pub struct IndividualVariables {
    sys: SystemKind,
}

impl IndividualVariables {
    pub fn new(sys: SystemKind) -> Self {
        Self { sys }
    }

    pub fn count(&self) -> usize {
        self.sys.n * self.sys.kind.single_dimension()
    }

    pub fn variable(&self, gbit: usize, digit: u8) -> Option<usize> {
        let d1 = self.sys.kind.single_dimension();
        (gbit < self.sys.n && digit >= 1 && usize::from(digit) <= d1)
            .then(|| gbit * d1 + usize::from(digit) - 1)
    }
}

/// Encodes `T1 ↔ T2 ↔ … ↔ Tm = value` as a constraint over individual values,
/// as a local hidden-variable model would have to.
///
/// Fails for rebit questions containing `3`s, which are correlations of
/// correlations with no individual counterpart.
pub fn relation_over_individuals(
    vars: &IndividualVariables,
    terms: &[SignedQuestion],
    value: bool,
) -> Result<XorConstraint, QuestionError> {
    let mut support = BTreeSet::new();
    let mut constant = terms.len().saturating_sub(1) % 2 == 1;
    for term in terms {
        let q = &term.index;
        if q.kind() != vars.sys.kind {
            return Err(QuestionError::KindMismatch { left: vars.sys.kind, right: q.kind() });
        }
        if q.n() != vars.sys.n {
            return Err(QuestionError::LengthMismatch { left: vars.sys.n, right: q.n() });
        }
        if q.kind() == GbitKind::Rebit && q.count_threes() > 0 {
            return Err(QuestionError::NotIndividualExpressible(q.to_string()));
        }
        for (gbit, &d) in q.digits().iter().enumerate().filter(|(_, &d)| d != 0) {
            let v = vars.variable(gbit, d).expect("digit range checked");
            if !support.remove(&v) {
                support.insert(v);
            }
        }
        constant ^= (q.weight() - 1) % 2 == 1;
        constant ^= term.sign.is_minus();
    }
    Ok(XorConstraint::xor(support.into_iter().collect::<Vec<_>>(), value ^ constant))
}
