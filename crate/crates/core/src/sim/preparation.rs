use serde::{Deserialize, Serialize};

use super::SimError;
use crate::oracle::{bloch_to_density, born_probability, lueders_update, DensityMatrix};
use crate::question::{is_mutually_compatible, QuestionIndex, SignedQuestion};
use crate::state::BlochState;
use crate::system::SystemKind;

/// Named preparation procedures.
///
/// `Bell` and `Ghz` pin the all-yes states of their generator sets:
/// `Q11 = Q22 = yes` and `Q211 = Q121 = Q112 = yes`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case", deny_unknown_fields)]
pub enum Preparation {
    TotallyMixed,
    /// Definite answers to mutually compatible questions, `"!q"` meaning no.
    /// Unconstrained degrees of freedom stay maximally mixed.
    PureAssignment { answers: Vec<String> },
    Bell,
    Ghz,
    /// Explicit yes-vector over the complete set, ordered lexicographically.
    Bloch {
        y: Vec<f64>,
        #[serde(default = "one")]
        p: f64,
    },
}

fn one() -> f64 {
    1.0
}

fn assign(sys: SystemKind, answers: &[SignedQuestion]) -> Result<DensityMatrix, SimError> {
    let indices: Vec<QuestionIndex> = answers.iter().map(|a| a.index.clone()).collect();
    for q in &indices {
        if q.system() != sys {
            return Err(SimError::ForeignQuestion { question: q.to_string(), expected: sys.to_string() });
        }
    }
    if !is_mutually_compatible(&indices)? {
        return Err(SimError::Preparation("assigned questions are not mutually compatible".into()));
    }
    let mut rho = DensityMatrix::maximally_mixed(sys.n);
    for a in answers {
        let yes = !a.sign.is_minus();
        let y = born_probability(&rho, &a.index)?;
        let branch = if yes { y } else { 1.0 - y };
        if branch < 1e-12 {
            return Err(SimError::Preparation(format!("answer `{a}` contradicts the earlier assignments")));
        }
        rho = lueders_update(&rho, &a.index, yes)?;
    }
    Ok(rho)
}

impl Preparation {
    pub fn density(&self, sys: SystemKind) -> Result<DensityMatrix, SimError> {
        let parse = |names: &[&str]| -> Result<Vec<SignedQuestion>, SimError> {
            names.iter().map(|s| Ok(SignedQuestion::parse(sys.kind, s)?)).collect()
        };
        match self {
            Preparation::TotallyMixed => Ok(DensityMatrix::maximally_mixed(sys.n)),
            Preparation::PureAssignment { answers } => {
                let names: Vec<&str> = answers.iter().map(String::as_str).collect();
                assign(sys, &parse(&names)?)
            }
            Preparation::Bell => {
                if sys.n != 2 {
                    return Err(SimError::Preparation(format!("bell needs 2 gbits, got {}", sys.n)));
                }
                assign(sys, &parse(&["11", "22"])?)
            }
            Preparation::Ghz => {
                if sys.n != 3 {
                    return Err(SimError::Preparation(format!("ghz needs 3 gbits, got {}", sys.n)));
                }
                assign(sys, &parse(&["211", "121", "112"])?)
            }
            Preparation::Bloch { y, p } => {
                let state = BlochState::new(sys, y.clone(), *p)?;
                let rho = bloch_to_density(&state)?;
                if !rho.is_physical() {
                    return Err(SimError::Preparation(format!(
                        "Bloch vector is not a valid state (smallest eigenvalue {:e})",
                        rho.min_eigenvalue()
                    )));
                }
                Ok(rho)
            }
        }
    }
}
