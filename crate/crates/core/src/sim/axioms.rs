use rand::seq::IndexedRandom;
use rayon::prelude::*;
use serde::Serialize;

use super::{derive_seed, sample_answers, shot_rng, Interrogation, SimError};
use crate::oracle::{born_probability, lueders_update, DensityMatrix};
use crate::question::{enumerate_complete_set, QuestionIndex};
use crate::random::{random_mixed_density, random_pure_density};
use crate::state::information_total;
use crate::system::SystemKind;

/// Outcome of one statistical or exact check.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AxiomCheck {
    pub name: &'static str,
    pub passed: bool,
    pub trials: u64,
    pub observed: f64,
    pub expected: f64,
    /// Largest accepted `|observed - expected|`.
    pub bound: f64,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AxiomReport {
    pub sys: SystemKind,
    pub trials: u64,
    pub seed: u64,
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_table(&self) -> String {
        let mut out = format!(
            "{:<34} {:>6} {:>8} {:>12} {:>12} {:>12}  {}\n",
            "check", "result", "trials", "observed", "expected", "bound", "detail"
        );
        for c in &self.checks {
            out += &format!(
                "{:<34} {:>6} {:>8} {:>12.6} {:>12.6} {:>12.6}  {}\n",
                c.name,
                if c.passed { "pass" } else { "FAIL" },
                c.trials,
                c.observed,
                c.expected,
                c.bound,
                c.detail
            );
        }
        out
    }

    pub fn to_json_lines(&self) -> String {
        self.checks.iter().map(|c| serde_json::to_string(c).expect("serializable") + "\n").collect()
    }
}

fn three_sigma(p: f64, trials: u64) -> f64 {
    3.0 * (p * (1.0 - p) / trials as f64).sqrt()
}

fn par_answers(
    rho: &DensityMatrix,
    script: &[QuestionIndex],
    seed: u64,
    trials: u64,
) -> Result<Vec<Vec<bool>>, SimError> {
    (0..trials)
        .into_par_iter()
        .map(|k| sample_answers(rho, script, &mut shot_rng(seed, k)))
        .collect()
}

fn skipped(name: &'static str, why: &str) -> AxiomCheck {
    AxiomCheck { name, passed: true, trials: 0, observed: 0.0, expected: 0.0, bound: 0.0, detail: format!("skipped: {why}") }
}

struct Setup {
    sys: SystemKind,
    questions: Vec<QuestionIndex>,
    trials: u64,
}

impl Setup {
    fn repeatability(&self, seed: u64) -> Result<AxiomCheck, SimError> {
        let mut rng = shot_rng(seed, u64::MAX);
        let rho = random_mixed_density(self.sys, &mut rng);
        let q = self.questions.choose(&mut rng).expect("non-empty").clone();
        let script = vec![q.clone(); 3];
        let broken = par_answers(&rho, &script, seed, self.trials)?
            .iter()
            .filter(|a| a.iter().any(|&x| x != a[0]))
            .count();
        Ok(AxiomCheck {
            name: "repeatability",
            passed: broken == 0,
            trials: self.trials,
            observed: broken as f64,
            expected: 0.0,
            bound: 0.0,
            detail: format!("{q} asked three times in a row; shots with differing answers"),
        })
    }

    fn compatible_invariance(&self, seed: u64) -> Result<AxiomCheck, SimError> {
        const NAME: &str = "compatible-independent invariance";
        let mut rng = shot_rng(seed, u64::MAX);
        let rho = random_mixed_density(self.sys, &mut rng);
        let pairs: Vec<(&QuestionIndex, &QuestionIndex)> = self
            .questions
            .iter()
            .flat_map(|a| self.questions.iter().map(move |b| (a, b)))
            .filter(|(a, b)| a != b && a.is_compatible(b).unwrap_or(false))
            .collect();
        let Some(&(first, second)) = pairs.choose(&mut rng) else {
            return Ok(skipped(NAME, "no two distinct questions are compatible"));
        };
        let y = born_probability(&rho, second)?;
        // exact part: averaging the branches of `first` leaves the marginal of `second`
        let mut averaged = 0.0;
        for answer in [true, false] {
            let p_first = born_probability(&rho, first)?;
            let weight = if answer { p_first } else { 1.0 - p_first };
            if weight > 1e-12 {
                averaged += weight * born_probability(&lueders_update(&rho, first, answer)?, second)?;
            }
        }
        let script = vec![first.clone(), second.clone()];
        let yes = par_answers(&rho, &script, seed, self.trials)?.iter().filter(|a| a[1]).count();
        let freq = yes as f64 / self.trials as f64;
        let bound = three_sigma(y, self.trials);
        Ok(AxiomCheck {
            name: NAME,
            passed: (freq - y).abs() <= bound && (averaged - y).abs() < 1e-10,
            trials: self.trials,
            observed: freq,
            expected: y,
            bound,
            detail: format!("frequency of {second} after asking {first}; branch average off by {:.1e}", (averaged - y).abs()),
        })
    }

    fn mutual_compatibility(&self, seed: u64) -> Result<AxiomCheck, SimError> {
        const NAME: &str = "mutual compatibility of triples";
        let mut rng = shot_rng(seed, u64::MAX);
        let rho = random_mixed_density(self.sys, &mut rng);
        let mut triple = None;
        for _ in 0..10_000 {
            let t: Vec<QuestionIndex> = self.questions.choose_multiple(&mut rng, 3).cloned().collect();
            if t.len() == 3
                && t[0].is_compatible(&t[1])?
                && t[0].is_compatible(&t[2])?
                && t[1].is_compatible(&t[2])?
            {
                triple = Some(t);
                break;
            }
        }
        let Some(t) = triple else {
            return Ok(skipped(NAME, "no pairwise compatible triple exists"));
        };
        let script: Vec<QuestionIndex> = t.iter().chain(t.iter()).cloned().collect();
        let broken = par_answers(&rho, &script, seed, self.trials)?
            .iter()
            .filter(|a| a[..3] != a[3..])
            .count();
        Ok(AxiomCheck {
            name: NAME,
            passed: broken == 0,
            trials: self.trials,
            observed: broken as f64,
            expected: 0.0,
            bound: 0.0,
            detail: format!("({}, {}, {}) asked twice; shots whose second round differs", t[0], t[1], t[2]),
        })
    }

    fn conservation(&self, seed: u64) -> Result<AxiomCheck, SimError> {
        let mut rng = shot_rng(seed, u64::MAX);
        let rho = random_pure_density(self.sys, &mut rng);
        let script: Vec<QuestionIndex> =
            (0..2 * self.sys.n + 2).map(|_| self.questions.choose(&mut rng).expect("non-empty").clone()).collect();
        // each snapshot costs 4^n expectations, so larger systems get fewer shots
        let trials = self.trials.min((500 >> (2 * self.sys.n.saturating_sub(3))).max(4) as u64);
        let interrogation = Interrogation::new(self.sys, rho, script, seed)?;
        let max = self.sys.max_information();
        let worst = super::run_shots(&interrogation, trials)?
            .iter()
            .flat_map(|t| t.records.iter().map(|r| (information_total(&r.post_state) - max).abs()))
            .fold(0.0, f64::max);
        Ok(AxiomCheck {
            name: "information conservation",
            passed: worst <= 1e-9,
            trials,
            observed: worst,
            expected: 0.0,
            bound: 1e-9,
            detail: format!("largest |I - {max}| after any answer, starting pure"),
        })
    }

    fn complementarity(&self, seed: u64) -> Result<AxiomCheck, SimError> {
        let mut rng = shot_rng(seed, u64::MAX);
        let rho = random_pure_density(self.sys, &mut rng);
        let first = self.questions.choose(&mut rng).expect("non-empty").clone();
        let partners: Vec<&QuestionIndex> = self
            .questions
            .iter()
            .filter(|q| first.is_complementary(q).unwrap_or(false))
            .collect();
        let second = (*partners.choose(&mut rng).expect("every question has a complement")).clone();
        let script = vec![first.clone(), second.clone(), first.clone()];
        let agree = par_answers(&rho, &script, seed, self.trials)?.iter().filter(|a| a[0] == a[2]).count();
        let freq = agree as f64 / self.trials as f64;
        let bound = three_sigma(0.5, self.trials);
        Ok(AxiomCheck {
            name: "complementarity erases",
            passed: (freq - 0.5).abs() <= bound,
            trials: self.trials,
            observed: freq,
            expected: 0.5,
            bound,
            detail: format!("{first}, {second}, {first}: agreement of the two {first} answers"),
        })
    }

    fn bell_anticorrelation(&self, seed: u64) -> Result<AxiomCheck, SimError> {
        const NAME: &str = "bell anti-correlation";
        if self.sys.n < 2 {
            return Ok(skipped(NAME, "needs two gbits"));
        }
        let pad = "0".repeat(self.sys.n - 2);
        let q = |s: &str| QuestionIndex::parse(self.sys.kind, &format!("{s}{pad}"));
        let mut rho = DensityMatrix::maximally_mixed(self.sys.n);
        for g in ["11", "22"] {
            rho = lueders_update(&rho, &q(g)?, true)?;
        }
        let yes = par_answers(&rho, &[q("33")?], seed, self.trials)?.iter().filter(|a| a[0]).count();
        Ok(AxiomCheck {
            name: NAME,
            passed: yes == 0,
            trials: self.trials,
            observed: yes as f64,
            expected: 0.0,
            bound: 0.0,
            detail: format!("after 11{pad} = 22{pad} = yes, count of 33{pad} = yes"),
        })
    }
}

/// Runs the statistical axiom checks with `n_trials` shots each.
///
/// Every check derives its own seed from `seed`, so the report is
/// reproducible bit for bit.
pub fn validate_axioms(sys: SystemKind, n_trials: u64, seed: u64) -> Result<AxiomReport, SimError> {
    if n_trials == 0 {
        return Err(SimError::NoShots);
    }
    let setup = Setup { sys, questions: enumerate_complete_set(sys).iter().cloned().collect(), trials: n_trials };
    let checks = vec![
        setup.repeatability(derive_seed(seed, 1))?,
        setup.compatible_invariance(derive_seed(seed, 2))?,
        setup.mutual_compatibility(derive_seed(seed, 3))?,
        setup.conservation(derive_seed(seed, 4))?,
        setup.complementarity(derive_seed(seed, 5))?,
        setup.bell_anticorrelation(derive_seed(seed, 6))?,
    ];
    Ok(AxiomReport { sys, trials: n_trials, seed, checks })
}
