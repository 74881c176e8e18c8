use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use crate::combinat::SchubertProblemSpec;
use crate::error::{invalid, Error, Result};
use crate::groebner::GbBudget;
use crate::schubert::OsculationType;

/// How a chunk of instances is solved.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ExecMode {
    /// On the rayon pool; sequential when built without `parallel`.
    #[default]
    Parallel,
    Sequential,
}

/// Everything that determines an experiment's output.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    #[serde(with = "problem_text")]
    pub problem: SchubertProblemSpec,
    pub instances_per_type: usize,
    pub master_seed: u64,
    /// Sampled coordinates lie in `[-R, R]`.
    pub point_range: i64,
    pub output_path: PathBuf,
    #[serde(default)]
    pub budgets: GbBudget,
    /// Restrict to these osculation types; all admissible types otherwise.
    #[serde(default)]
    pub types: Option<Vec<Vec<usize>>>,
    /// Store wall-clock times. Off by default so logs are reproducible byte for byte.
    #[serde(default)]
    pub timing: bool,
    #[serde(default)]
    pub mode: ExecMode,
    /// Samples tried per record before the slot is given up.
    #[serde(default = "default_attempts")]
    pub max_attempts: usize,
    /// Instances solved between log appends.
    #[serde(default = "default_chunk")]
    pub chunk_size: usize,
    /// Stop after this many new records, as if interrupted.
    #[serde(default)]
    pub stop_after: Option<usize>,
}

fn default_attempts() -> usize {
    20
}

fn default_chunk() -> usize {
    32
}

impl ExperimentConfig {
    pub fn new(problem: SchubertProblemSpec, instances_per_type: usize, master_seed: u64, output_path: PathBuf) -> Self {
        Self {
            problem,
            instances_per_type,
            master_seed,
            point_range: 10,
            output_path,
            budgets: GbBudget::default(),
            types: None,
            timing: false,
            mode: ExecMode::default(),
            max_attempts: default_attempts(),
            chunk_size: default_chunk(),
            stop_after: None,
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let c: Self = serde_json::from_str(text)?;
        c.validate()?;
        Ok(c)
    }

    pub fn validate(&self) -> Result<()> {
        if self.instances_per_type == 0 {
            return invalid("instances_per_type must be at least 1");
        }
        if self.point_range < 2 {
            return invalid(format!("point_range must be at least 2, got {}", self.point_range));
        }
        if self.max_attempts == 0 || self.chunk_size == 0 {
            return invalid("max_attempts and chunk_size must be positive");
        }
        self.osculation_types().map(|_| ())
    }

    /// The targeted types, validated, in descending order.
    pub fn osculation_types(&self) -> Result<Vec<OsculationType>> {
        let Some(types) = &self.types else {
            return Ok(OsculationType::all(&self.problem));
        };
        let mut out: Vec<OsculationType> = types.iter().cloned().map(OsculationType).collect();
        for t in &out {
            t.validate(&self.problem)?;
        }
        out.sort_by(|a, b| b.cmp(a));
        out.dedup();
        if out.is_empty() {
            return Err(Error::Invalid("empty list of osculation types".into()));
        }
        Ok(out)
    }
}

mod problem_text {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::combinat::SchubertProblemSpec;

    pub fn serialize<S: Serializer>(p: &SchubertProblemSpec, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(p)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<SchubertProblemSpec, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}
