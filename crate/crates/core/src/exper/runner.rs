use std::collections::HashSet;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::record::{self, DiscardRecord, InstanceRecord};
use super::sample::{derive_seed, sample_instance};
use super::{ExecMode, ExperimentConfig};
use crate::combinat::complex_count;
use crate::error::{invalid, Error, Result};
use crate::groebner::{solve_instance, SolveOptions, SolveReport};
use crate::par;
use crate::schubert::{OsculatingInstance, OsculationType};

/// What a run left behind.
#[derive(Clone, Debug, PartialEq)]
pub struct RunReport {
    /// The whole log after the run, in log order.
    pub records: Vec<InstanceRecord>,
    pub new_records: usize,
    /// Discarded samples written by this run.
    pub discarded: usize,
    /// `(type, index)` slots whose every attempt was discarded.
    pub exhausted: Vec<(OsculationType, usize)>,
}

fn map_mode<T, U, F>(mode: ExecMode, items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    match mode {
        ExecMode::Parallel => par::map_collect(items, f),
        ExecMode::Sequential => par::map_collect_seq(items, f),
    }
}

/// Solves a batch of instances against the same expected count.
pub fn solve_batch(
    instances: &[OsculatingInstance],
    expected: u64,
    opts: &SolveOptions,
    mode: ExecMode,
) -> Vec<Result<SolveReport>> {
    map_mode(mode, instances, |inst| solve_instance(inst, expected, opts))
}

struct Slot {
    osc_type: OsculationType,
    index: usize,
}

struct SlotOutcome {
    record: Option<InstanceRecord>,
    discarded: Vec<DiscardRecord>,
}

fn solve_slot(config: &ExperimentConfig, expected: u64, slot: &Slot) -> SlotOutcome {
    let problem = &config.problem;
    let problem_text = problem.to_string();
    let mut discarded = Vec::new();
    for attempt in 0..config.max_attempts {
        let seed = derive_seed(config.master_seed, &slot.osc_type, slot.index, attempt);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let discard = |points: Vec<String>, reason: String| DiscardRecord {
            problem: problem_text.clone(),
            osculation_type: slot.osc_type.0.clone(),
            instance_index: slot.index,
            attempt,
            derived_seed: seed,
            points,
            reason,
        };
        let inst = match sample_instance(problem, &slot.osc_type, &mut rng, config.point_range) {
            Ok(i) => i,
            Err(e) => {
                discarded.push(discard(vec![], format!("sampling: {e}")));
                continue;
            }
        };
        let opts = SolveOptions { budget: config.budgets, seed, ..SolveOptions::default() };
        let start = Instant::now();
        let outcome = solve_instance(&inst, expected, &opts);
        let elapsed_ms = if config.timing { start.elapsed().as_millis() as u64 } else { 0 };
        match outcome {
            Ok(rep) if rep.transversal => {
                let record = InstanceRecord {
                    problem: problem_text.clone(),
                    k: problem.k(),
                    n: problem.n(),
                    instance_index: slot.index,
                    derived_seed: seed,
                    osculation_type: slot.osc_type.0.clone(),
                    points: inst.point_strings(),
                    num_real: rep.num_real,
                    num_complex: rep.num_complex,
                    transversal: true,
                    elapsed_ms,
                    chart: rep.chart,
                };
                return SlotOutcome { record: Some(record), discarded };
            }
            Ok(rep) => discarded.push(discard(
                inst.point_strings(),
                format!(
                    "non-transversal: {} distinct of {} with multiplicity, {expected} expected",
                    rep.num_complex, rep.multiplicity_count
                ),
            )),
            Err(Error::Resource(m)) => discarded.push(discard(inst.point_strings(), format!("resource: {m}"))),
            Err(e) => discarded.push(discard(inst.point_strings(), format!("degenerate: {e}"))),
        }
    }
    SlotOutcome { record: None, discarded }
}

/// Runs (or resumes) an experiment: `instances_per_type` transversal
/// records for every targeted osculation type, appended to the log in a
/// fixed slot order. Slots already in the log are skipped, so an
/// interrupted run resumes to the same final log. Chunks of slots are
/// solved concurrently and appended together once the chunk is done.
pub fn run_experiment(config: &ExperimentConfig) -> Result<RunReport> {
    config.validate()?;
    let types = config.osculation_types()?;
    let expected = complex_count(&config.problem)?;
    let problem_text = config.problem.to_string();
    let log = &config.output_path;
    let side = record::discarded_log_path(log);

    let mut records = record::read_log_repairing(log)?;
    if let Some(r) = records.iter().find(|r| r.problem != problem_text) {
        return invalid(format!("log {} holds records for {}, not {problem_text}", log.display(), r.problem));
    }
    let done: HashSet<(Vec<usize>, usize)> =
        records.iter().map(|r| (r.osculation_type.clone(), r.instance_index)).collect();
    // discards of slots that never completed are regenerated on resume
    let old_discards = record::read_discarded_repairing(&side)?;
    let kept: Vec<DiscardRecord> = old_discards
        .iter()
        .filter(|d| done.contains(&(d.osculation_type.clone(), d.instance_index)))
        .cloned()
        .collect();
    if kept.len() != old_discards.len() {
        record::rewrite(&side, &kept)?;
    }

    let mut pending: Vec<Slot> = types
        .iter()
        .flat_map(|t| (0..config.instances_per_type).map(move |index| Slot { osc_type: t.clone(), index }))
        .filter(|s| !done.contains(&(s.osc_type.0.clone(), s.index)))
        .collect();
    if let Some(limit) = config.stop_after {
        pending.truncate(limit);
    }

    let mut report = RunReport { records: vec![], new_records: 0, discarded: 0, exhausted: vec![] };
    for chunk in pending.chunks(config.chunk_size) {
        let outcomes = map_mode(config.mode, chunk, |slot| solve_slot(config, expected, slot));
        let mut new = Vec::new();
        let mut discards = Vec::new();
        for (slot, out) in chunk.iter().zip(outcomes) {
            discards.extend(out.discarded);
            match out.record {
                Some(r) => new.push(r),
                None => report.exhausted.push((slot.osc_type.clone(), slot.index)),
            }
        }
        // discards first: a record line marks its slot complete
        record::append(&side, &discards)?;
        record::append(log, &new)?;
        report.discarded += discards.len();
        report.new_records += new.len();
        records.extend(new);
    }
    report.records = records;
    Ok(report)
}
