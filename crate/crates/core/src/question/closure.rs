use std::collections::BTreeMap;

use super::{xnor_compose, Composition, QuestionError, QuestionIndex, Sign, SignedQuestion};

/// Every signed question derivable from `gens` by repeated XNOR composition.
///
/// The result is sorted by index and excludes the tautology. `k` independent
/// generators close to `2^k - 1` questions.
pub fn logical_closure(gens: &[SignedQuestion]) -> Result<Vec<SignedQuestion>, QuestionError> {
    for (i, a) in gens.iter().enumerate() {
        for b in &gens[i + 1..] {
            if !a.index.is_compatible(&b.index)? {
                return Err(QuestionError::CompositionUndefined(
                    a.index.to_string(),
                    b.index.to_string(),
                ));
            }
        }
    }

    let mut known: BTreeMap<QuestionIndex, Sign> = BTreeMap::new();
    let mut frontier = Vec::new();
    for g in gens {
        if insert(&mut known, g)? {
            frontier.push(g.clone());
        }
    }

    while let Some(next) = frontier.pop() {
        let existing: Vec<SignedQuestion> = known
            .iter()
            .map(|(q, &s)| SignedQuestion::new(q.clone(), s))
            .collect();
        for other in existing {
            match xnor_compose(&next, &other)? {
                Composition::Question(c) => {
                    if insert(&mut known, &c)? {
                        frontier.push(c);
                    }
                }
                Composition::AlwaysTrue => {}
                Composition::AlwaysFalse => {
                    return Err(QuestionError::InconsistentGenerators(next.index.to_string()))
                }
            }
        }
    }

    Ok(known.into_iter().map(|(q, s)| SignedQuestion::new(q, s)).collect())
}

/// Returns `Ok(true)` if `s` was new.
fn insert(known: &mut BTreeMap<QuestionIndex, Sign>, s: &SignedQuestion) -> Result<bool, QuestionError> {
    match known.get(&s.index) {
        Some(&existing) if existing == s.sign => Ok(false),
        Some(_) => Err(QuestionError::InconsistentGenerators(s.index.to_string())),
        None => {
            known.insert(s.index.clone(), s.sign);
            Ok(true)
        }
    }
}
