use rand::Rng;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use super::{shot_rng, SimError};
use crate::oracle::{born_probability, density_to_bloch, lueders_update, DensityMatrix};
use crate::question::QuestionIndex;
use crate::state::BlochState;
use crate::system::SystemKind;

/// Born probabilities this close to 0 or 1 are treated as exact, so a
/// round-off branch is never sampled.
const DEFINITE: f64 = 1e-12;

/// A preparation followed by an ordered list of questions.
#[derive(Debug, Clone)]
pub struct Interrogation {
    sys: SystemKind,
    preparation: DensityMatrix,
    script: Vec<QuestionIndex>,
    seed: u64,
}

impl Interrogation {
    pub fn new(
        sys: SystemKind,
        preparation: DensityMatrix,
        script: Vec<QuestionIndex>,
        seed: u64,
    ) -> Result<Self, SimError> {
        if preparation.dim() != sys.hilbert_dimension() {
            return Err(SimError::PreparationDimension { expected: sys.hilbert_dimension(), got: preparation.dim() });
        }
        if let Some(q) = script.iter().find(|q| q.system() != sys) {
            return Err(SimError::ForeignQuestion { question: q.to_string(), expected: sys.to_string() });
        }
        Ok(Self { sys, preparation, script, seed })
    }

    pub fn system(&self) -> SystemKind {
        self.sys
    }

    pub fn preparation(&self) -> &DensityMatrix {
        &self.preparation
    }

    pub fn script(&self) -> &[QuestionIndex] {
        &self.script
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }
}

fn yes_no<S: Serializer>(answer: &bool, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(if *answer { "yes" } else { "no" })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AnswerRecord {
    pub question: QuestionIndex,
    #[serde(serialize_with = "yes_no")]
    pub answer: bool,
    /// Born probability of `yes` just before the question was asked.
    pub pre_probability: f64,
    pub post_state: BlochState,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TranscriptRecord {
    pub shot: u64,
    pub records: Vec<AnswerRecord>,
}

impl TranscriptRecord {
    pub fn answers(&self) -> Vec<bool> {
        self.records.iter().map(|r| r.answer).collect()
    }
}

fn ask<R: Rng + ?Sized>(rho: &DensityMatrix, q: &QuestionIndex, rng: &mut R) -> Result<(bool, f64, DensityMatrix), SimError> {
    let y = born_probability(rho, q)?;
    let u: f64 = rng.random();
    let answer = if y <= DEFINITE {
        false
    } else if y >= 1.0 - DEFINITE {
        true
    } else {
        u < y
    };
    Ok((answer, y, lueders_update(rho, q, answer)?))
}

/// Answers only, without post-state snapshots.
pub fn sample_answers<R: Rng + ?Sized>(
    preparation: &DensityMatrix,
    script: &[QuestionIndex],
    rng: &mut R,
) -> Result<Vec<bool>, SimError> {
    let mut rho = preparation.clone();
    let mut answers = Vec::with_capacity(script.len());
    for q in script {
        let (answer, _, next) = ask(&rho, q, rng)?;
        answers.push(answer);
        rho = next;
    }
    Ok(answers)
}

fn run_shot(i: &Interrogation, shot: u64) -> Result<TranscriptRecord, SimError> {
    let mut rng = shot_rng(i.seed, shot);
    let mut rho = i.preparation.clone();
    let mut records = Vec::with_capacity(i.script.len());
    for q in &i.script {
        let (answer, pre_probability, next) = ask(&rho, q, &mut rng)?;
        rho = next;
        records.push(AnswerRecord {
            question: q.clone(),
            answer,
            pre_probability,
            post_state: density_to_bloch(&rho, i.sys)?,
        });
    }
    Ok(TranscriptRecord { shot, records })
}

/// Shot 0 of the interrogation.
pub fn run_single_shot(i: &Interrogation) -> Result<TranscriptRecord, SimError> {
    run_shot(i, 0)
}

/// Shots `0..count`, run in parallel and returned in shot order.
pub fn run_shots(i: &Interrogation, count: u64) -> Result<Vec<TranscriptRecord>, SimError> {
    (0..count).into_par_iter().map(|k| run_shot(i, k)).collect()
}
