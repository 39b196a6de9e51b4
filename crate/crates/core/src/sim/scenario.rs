use serde::{Deserialize, Serialize};

use super::{
    run_shots, run_tomography, Interrogation, Preparation, SimError, TomographyReport, TomographySchedule,
    TranscriptRecord,
};
use crate::question::{enumerate_complete_set, QuestionIndex};
use crate::system::{GbitKind, SystemKind};

/// Simulation request as read from a scenario file.
///
/// ```json
/// {"kind": "qubit", "n": 2, "preparation": {"type": "bell"},
///  "script": ["33"], "shots": 100, "seed": 7}
/// ```
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    pub kind: GbitKind,
    pub n: usize,
    pub preparation: Preparation,
    /// Questions asked in order during each single shot.
    #[serde(default)]
    pub script: Vec<String>,
    #[serde(default = "default_shots")]
    pub shots: u64,
    #[serde(default)]
    pub seed: u64,
    #[serde(default)]
    pub tomography: Option<TomographySpec>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TomographySpec {
    /// Defaults to the complete set.
    #[serde(default)]
    pub questions: Option<Vec<String>>,
    pub shots_per_question: u64,
    #[serde(default)]
    pub schedule: TomographySchedule,
}

fn default_shots() -> u64 {
    1
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScenarioOutcome {
    pub transcripts: Vec<TranscriptRecord>,
    pub tomography: Option<TomographyReport>,
}

impl Scenario {
    /// Parses scenario JSON; errors carry the line, column and field.
    pub fn from_json(text: &str) -> Result<Self, String> {
        serde_json::from_str(text).map_err(|e| e.to_string())
    }

    pub fn system(&self) -> Result<SystemKind, SimError> {
        Ok(SystemKind::new(self.kind, self.n)?)
    }

    fn parse_all(&self, names: &[String]) -> Result<Vec<QuestionIndex>, SimError> {
        names.iter().map(|s| Ok(QuestionIndex::parse(self.kind, s)?)).collect()
    }

    pub fn run(&self) -> Result<ScenarioOutcome, SimError> {
        let sys = self.system()?;
        let rho = self.preparation.density(sys)?;
        let transcripts = if self.script.is_empty() {
            Vec::new()
        } else {
            if self.shots == 0 {
                return Err(SimError::NoShots);
            }
            let i = Interrogation::new(sys, rho.clone(), self.parse_all(&self.script)?, self.seed)?;
            run_shots(&i, self.shots)?
        };
        let tomography = match &self.tomography {
            None => None,
            Some(spec) => {
                let questions = match &spec.questions {
                    Some(names) => self.parse_all(names)?,
                    None => enumerate_complete_set(sys).iter().cloned().collect(),
                };
                Some(run_tomography(sys, &rho, spec.shots_per_question, &questions, spec.schedule, self.seed)?)
            }
        };
        Ok(ScenarioOutcome { transcripts, tomography })
    }
}
