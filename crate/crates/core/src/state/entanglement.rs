//! Informational entanglement measures: composite information across a cut,
//! and the tangle sums for three gbits.

use serde::Serialize;

use super::{question_informations, BlochState, StateError};

/// Composite information above this (plus a `1e-9` guard) means entangled.
pub const CLASSICAL_COMPOSITE_BOUND: f64 = 1.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum EntanglementClass {
    Entangled,
    ClassicallyComposed,
}

/// Sum of `α_i` over questions whose support is exactly `support`.
pub fn support_information(state: &BlochState, support: u64) -> f64 {
    state
        .questions()
        .iter()
        .zip(question_informations(state))
        .filter(|(q, _)| q.support() == support)
        .map(|(_, a)| a)
        .sum()
}

fn check_partition(state: &BlochState, part_a: u64) -> Result<u64, StateError> {
    let n = state.system().n;
    let full = if n >= 64 { u64::MAX } else { (1u64 << n) - 1 };
    if part_a & !full != 0 || part_a == 0 || part_a == full {
        return Err(StateError::InvalidBipartition(part_a));
    }
    Ok(full & !part_a)
}

/// Information held in correlation questions straddling the cut `part_a | rest`.
pub fn composite_information(state: &BlochState, part_a: u64) -> Result<f64, StateError> {
    let part_b = check_partition(state, part_a)?;
    Ok(state
        .questions()
        .iter()
        .zip(question_informations(state))
        .filter(|(q, _)| q.support() & part_a != 0 && q.support() & part_b != 0)
        .map(|(_, a)| a)
        .sum())
}

/// `part_a` is a bit mask of gbits on one side of the cut.
pub fn entanglement_class(state: &BlochState, part_a: u64) -> Result<EntanglementClass, StateError> {
    let composite = composite_information(state, part_a)?;
    Ok(if composite > CLASSICAL_COMPOSITE_BOUND + 1e-9 {
        EntanglementClass::Entangled
    } else {
        EntanglementClass::ClassicallyComposed
    })
}

/// Informational tangles of a three-gbit state, seen from one focus gbit.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Tangles {
    /// Focus versus the remaining pair.
    pub focus_rest: f64,
    /// Focus with the lower-numbered other gbit.
    pub focus_first: f64,
    /// Focus with the higher-numbered other gbit.
    pub focus_second: f64,
    /// Tripartite information, `focus_rest - focus_first - focus_second`.
    pub three_tangle: f64,
}

/// Tangles about gbit A (gbit 0).
pub fn tangles(state: &BlochState) -> Result<Tangles, StateError> {
    tangles_about(state, 0)
}

pub fn tangles_about(state: &BlochState, focus: usize) -> Result<Tangles, StateError> {
    if state.system().n != 3 {
        return Err(StateError::WrongGbitCount { expected: 3, got: state.system().n });
    }
    if focus > 2 {
        return Err(StateError::InvalidBipartition(1 << focus));
    }
    let mut others = (0..3).filter(|&a| a != focus);
    let (b, c) = (others.next().unwrap(), others.next().unwrap());
    let f = 1u64 << focus;
    let focus_first = support_information(state, f | 1 << b);
    let focus_second = support_information(state, f | 1 << c);
    let three_tangle = support_information(state, 0b111);
    Ok(Tangles {
        focus_rest: three_tangle + focus_first + focus_second,
        focus_first,
        focus_second,
        three_tangle,
    })
}
