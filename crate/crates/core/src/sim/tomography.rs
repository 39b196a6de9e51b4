use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{shot_rng, SimError};
use crate::oracle::{born_probability, DensityMatrix};
use crate::question::QuestionIndex;
use crate::state::BlochState;
use crate::system::SystemKind;

/// How shot indices are assigned to questions. Each shot interrogates a
/// fresh copy of the preparation with a single question, so the schedule
/// only changes which random stream a given measurement uses.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TomographySchedule {
    /// Question `j` gets the contiguous block of shots `j*n .. (j+1)*n`.
    #[default]
    PerQuestion,
    /// Shot `k` asks question `k mod m`.
    RoundRobin,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QuestionEstimate {
    pub question: QuestionIndex,
    pub shots: u64,
    pub yes_count: u64,
    /// Empirical yes-frequency.
    pub estimate: f64,
    /// `sqrt(ŷ (1 - ŷ) / n)`.
    pub std_error: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TomographyReport {
    pub sys: SystemKind,
    pub shots_per_question: u64,
    pub schedule: TomographySchedule,
    pub estimates: Vec<QuestionEstimate>,
}

impl TomographyReport {
    pub fn estimate_of(&self, q: &QuestionIndex) -> Option<&QuestionEstimate> {
        self.estimates.iter().find(|e| &e.question == q)
    }

    /// Estimated state. Questions that were not measured carry no data and
    /// are set to `1/2`; frequencies are taken at face value, so the result
    /// may be slightly outside the physical state space.
    pub fn to_state(&self) -> Result<BlochState, SimError> {
        let mut state = BlochState::no_information(self.sys);
        let mut y = state.y().to_vec();
        for e in &self.estimates {
            let pos = state.questions().position(&e.question).expect("question belongs to the system");
            y[pos] = e.estimate;
        }
        state = BlochState::new(self.sys, y, 1.0)?;
        Ok(state)
    }

    /// One JSON object per question.
    pub fn to_json_lines(&self) -> String {
        self.estimates
            .iter()
            .map(|e| serde_json::to_string(e).expect("serializable") + "\n")
            .collect()
    }

    pub fn to_table(&self) -> String {
        let mut out = format!("{:<12} {:>10} {:>10} {:>10} {:>10}\n", "question", "shots", "yes", "estimate", "std_err");
        for e in &self.estimates {
            out += &format!(
                "{:<12} {:>10} {:>10} {:>10.6} {:>10.6}\n",
                e.question.to_string(),
                e.shots,
                e.yes_count,
                e.estimate,
                e.std_error
            );
        }
        out
    }
}

/// Estimates the yes-probability of every question in `questions` from
/// `shots_per_question` fresh copies of `preparation` each.
pub fn run_tomography(
    sys: SystemKind,
    preparation: &DensityMatrix,
    shots_per_question: u64,
    questions: &[QuestionIndex],
    schedule: TomographySchedule,
    seed: u64,
) -> Result<TomographyReport, SimError> {
    if questions.is_empty() {
        return Err(SimError::EmptyQuestionSet);
    }
    if shots_per_question == 0 {
        return Err(SimError::NoShots);
    }
    if preparation.dim() != sys.hilbert_dimension() {
        return Err(SimError::PreparationDimension { expected: sys.hilbert_dimension(), got: preparation.dim() });
    }
    if let Some(q) = questions.iter().find(|q| q.system() != sys) {
        return Err(SimError::ForeignQuestion { question: q.to_string(), expected: sys.to_string() });
    }
    let m = questions.len() as u64;
    let estimates = questions
        .iter()
        .enumerate()
        .map(|(j, q)| {
            let y = born_probability(preparation, q)?;
            let j = j as u64;
            let yes_count: u64 = (0..shots_per_question)
                .into_par_iter()
                .map(|s| {
                    let k = match schedule {
                        TomographySchedule::PerQuestion => j * shots_per_question + s,
                        TomographySchedule::RoundRobin => s * m + j,
                    };
                    u64::from(shot_rng(seed, k).random::<f64>() < y)
                })
                .sum();
            let estimate = yes_count as f64 / shots_per_question as f64;
            Ok(QuestionEstimate {
                question: q.clone(),
                shots: shots_per_question,
                yes_count,
                estimate,
                std_error: (estimate * (1.0 - estimate) / shots_per_question as f64).sqrt(),
            })
        })
        .collect::<Result<Vec<_>, SimError>>()?;
    Ok(TomographyReport { sys, shots_per_question, schedule, estimates })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::question::enumerate_complete_set;
    use crate::sim::Preparation;
    use crate::GbitKind;

    #[test]
    fn eigenstate_gives_certain_estimate() {
        let sys = SystemKind::qubits(1);
        let rho = Preparation::PureAssignment { answers: vec!["3".into()] }.density(sys).unwrap();
        let q = QuestionIndex::parse(GbitKind::Qubit, "3").unwrap();
        let r = run_tomography(sys, &rho, 1000, &[q], TomographySchedule::PerQuestion, 1).unwrap();
        assert_eq!(r.estimates[0].yes_count, 1000);
        assert_eq!(r.estimates[0].std_error, 0.0);
    }

    #[test]
    fn totally_mixed_estimates_near_half() {
        let sys = SystemKind::rebits(2);
        let qs: Vec<_> = enumerate_complete_set(sys).iter().cloned().collect();
        let n = 4000;
        for schedule in [TomographySchedule::PerQuestion, TomographySchedule::RoundRobin] {
            let r = run_tomography(sys, &DensityMatrix::maximally_mixed(2), n, &qs, schedule, 3).unwrap();
            for e in &r.estimates {
                assert!((e.estimate - 0.5).abs() <= 5.0 / (n as f64).sqrt());
            }
            let state = r.to_state().unwrap();
            assert_eq!(state.y().len(), 9);
        }
    }

    #[test]
    fn invalid_requests_rejected() {
        let sys = SystemKind::qubits(1);
        let rho = DensityMatrix::maximally_mixed(1);
        let q = QuestionIndex::parse(GbitKind::Qubit, "1").unwrap();
        let s = TomographySchedule::PerQuestion;
        assert_eq!(run_tomography(sys, &rho, 10, &[], s, 0).unwrap_err(), SimError::EmptyQuestionSet);
        assert_eq!(run_tomography(sys, &rho, 0, &[q], s, 0).unwrap_err(), SimError::NoShots);
    }

    #[test]
    fn reports_are_reproducible() {
        let sys = SystemKind::qubits(1);
        let qs: Vec<_> = enumerate_complete_set(sys).iter().cloned().collect();
        let rho = DensityMatrix::maximally_mixed(1);
        let a = run_tomography(sys, &rho, 500, &qs, TomographySchedule::RoundRobin, 8).unwrap();
        let b = run_tomography(sys, &rho, 500, &qs, TomographySchedule::RoundRobin, 8).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_json_lines().lines().count(), 3);
    }
}
