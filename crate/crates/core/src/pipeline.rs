//! Generate, re-verify and deduplicate examples, then band and export them.
//!
//! Example `i` of a run is always produced from the child seed
//! `stable_mix(master_seed, i)`. Indices are evaluated in parallel batches and
//! merged strictly in index order, so the accepted set, the statistics and
//! the emitted bytes depend only on the configuration, never on the number of
//! workers. Failed, rejected and duplicate attempts still consume their
//! index.

use std::collections::{BTreeMap, HashSet};
use std::io::{BufRead, Write};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::PipelineError;
use crate::grid::{canonical_digest, Example, Grid};
use crate::metrics::{pso_difficulty, rng_difficulty_of};
use crate::rng::{stable_mix, DifficultyBounds, TracedRng};
use crate::tasks::Task;

/// Output file layout.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    /// One [`Record`] per line.
    Jsonl,
    /// `{"<task>": [{"input": .., "output": ..}, ..]}` as in ARC files.
    ArcJson,
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub tasks: Vec<Task>,
    /// Unique verified examples wanted per task.
    pub count: usize,
    pub bounds: DifficultyBounds,
    pub master_seed: u64,
    /// Attempt budget per task.
    pub max_attempts: u64,
    pub workers: usize,
}

impl RunConfig {
    /// Defaults: full difficulty range, seed 0, a budget of 20 attempts per
    /// requested example, one worker.
    pub fn new(tasks: Vec<Task>, count: usize) -> Self {
        RunConfig {
            tasks,
            count,
            bounds: DifficultyBounds::FULL,
            master_seed: 0,
            max_attempts: default_max_attempts(count),
            workers: 1,
        }
    }

    pub fn validate(&self) -> Result<(), PipelineError> {
        let fail = |msg: &str| Err(PipelineError::Config(msg.to_string()));
        if self.tasks.is_empty() {
            return fail("no tasks selected");
        }
        if self.count == 0 {
            return fail("count must be at least 1");
        }
        if self.max_attempts < self.count as u64 {
            return fail("max attempts must be at least count");
        }
        if self.workers == 0 {
            return fail("workers must be at least 1");
        }
        Ok(())
    }
}

pub fn default_max_attempts(count: usize) -> u64 {
    20 * count as u64
}

/// Attempt accounting for one task. Every attempt lands in exactly one of
/// the four outcome counters.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct RunStats {
    pub attempts: u64,
    pub generator_failures: u64,
    pub verifier_rejections: u64,
    pub duplicates: u64,
    pub accepted: u64,
    pub elapsed_seconds: f64,
}

impl RunStats {
    /// Accepted examples per second.
    pub fn throughput(&self) -> f64 {
        if self.elapsed_seconds > 0.0 {
            self.accepted as f64 / self.elapsed_seconds
        } else {
            0.0
        }
    }

    /// Fraction of attempts that were accepted.
    pub fn efficiency(&self) -> f64 {
        if self.attempts == 0 {
            0.0
        } else {
            self.accepted as f64 / self.attempts as f64
        }
    }

    pub fn is_consistent(&self) -> bool {
        self.attempts
            == self.generator_failures + self.verifier_rejections + self.duplicates + self.accepted
    }
}

/// One exported example.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Record {
    pub task: String,
    pub index: u64,
    pub input: Grid,
    pub output: Grid,
    pub rng_difficulty: f64,
    pub pso_difficulty: f64,
}

impl Record {
    pub fn example(&self) -> Example {
        Example::new(self.input.clone(), self.output.clone())
    }
}

#[derive(Debug, Clone)]
pub struct TaskRun {
    pub task: Task,
    pub stats: RunStats,
    /// Examples missing from `count` when the attempt budget ran out.
    pub shortfall: usize,
}

#[derive(Debug, Clone)]
pub struct RunOutput {
    /// Grouped by task in configuration order, then sorted by index.
    pub records: Vec<Record>,
    pub runs: Vec<TaskRun>,
}

impl RunOutput {
    pub fn has_shortfall(&self) -> bool {
        self.runs.iter().any(|r| r.shortfall > 0)
    }
}

enum Outcome {
    Failed,
    Rejected,
    Valid(Box<([u8; 32], Record)>),
}

fn evaluate(task: Task, bounds: &DifficultyBounds, master_seed: u64, index: u64) -> Outcome {
    let mut rng = TracedRng::new(stable_mix(master_seed, index));
    let attempt = task.generate(&mut rng, bounds);
    let Ok(example) = &attempt.outcome else {
        return Outcome::Failed;
    };
    // Checked against the verifier alone, whatever the generator claims.
    match task.verify(&example.input) {
        Ok(out) if out == example.output => {}
        _ => return Outcome::Rejected,
    }
    let digest = canonical_digest(example);
    let record = Record {
        task: task.id().to_string(),
        index,
        rng_difficulty: rng_difficulty_of(&attempt),
        pso_difficulty: pso_difficulty(example).pso_difficulty,
        input: example.input.clone(),
        output: example.output.clone(),
    };
    Outcome::Valid(Box::new((digest, record)))
}

struct Limits {
    count: u64,
    max_attempts: u64,
    deadline: Option<Instant>,
}

fn drive(
    task: Task,
    bounds: &DifficultyBounds,
    master_seed: u64,
    limits: Limits,
    pool: &rayon::ThreadPool,
    mut emit: impl FnMut(Record),
) -> RunStats {
    let start = Instant::now();
    let batch = (pool.current_num_threads() as u64 * 64).max(64);
    let mut stats = RunStats::default();
    let mut seen = HashSet::new();
    let mut next = 0u64;
    'outer: while stats.accepted < limits.count && stats.attempts < limits.max_attempts {
        if limits.deadline.is_some_and(|d| Instant::now() >= d) {
            break;
        }
        let want = (limits.count - stats.accepted).saturating_mul(2).max(16);
        let len = batch
            .min(want)
            .min(limits.max_attempts - stats.attempts);
        let indices: Vec<u64> = (next..next + len).collect();
        next += len;
        let outcomes: Vec<Outcome> = if pool.current_num_threads() == 1 {
            indices
                .iter()
                .map(|&i| evaluate(task, bounds, master_seed, i))
                .collect()
        } else {
            pool.install(|| {
                indices
                    .par_iter()
                    .map(|&i| evaluate(task, bounds, master_seed, i))
                    .collect()
            })
        };
        for outcome in outcomes {
            stats.attempts += 1;
            match outcome {
                Outcome::Failed => stats.generator_failures += 1,
                Outcome::Rejected => stats.verifier_rejections += 1,
                Outcome::Valid(valid) => {
                    let (digest, record) = *valid;
                    if seen.insert(digest) {
                        stats.accepted += 1;
                        emit(record);
                    } else {
                        stats.duplicates += 1;
                    }
                }
            }
            if stats.accepted == limits.count {
                break 'outer;
            }
        }
    }
    stats.elapsed_seconds = start.elapsed().as_secs_f64();
    stats
}

fn build_pool(workers: usize) -> Result<rayon::ThreadPool, PipelineError> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| PipelineError::Config(e.to_string()))
}

/// Generates up to `count` unique verified examples per configured task.
///
/// Running out of attempts is not an error: the affected task reports a
/// non-zero [`TaskRun::shortfall`].
pub fn run_generation(cfg: &RunConfig) -> Result<RunOutput, PipelineError> {
    cfg.validate()?;
    let pool = build_pool(cfg.workers)?;
    let mut records = Vec::new();
    let mut runs = Vec::with_capacity(cfg.tasks.len());
    for &task in &cfg.tasks {
        let limits = Limits {
            count: cfg.count as u64,
            max_attempts: cfg.max_attempts,
            deadline: None,
        };
        let stats = drive(task, &cfg.bounds, cfg.master_seed, limits, &pool, |r| {
            records.push(r)
        });
        runs.push(TaskRun {
            task,
            stats,
            shortfall: cfg.count - stats.accepted as usize,
        });
    }
    Ok(RunOutput { records, runs })
}

/// Generates verified unique examples for `duration` and reports the rate.
pub fn measure_throughput(
    task: Task,
    bounds: &DifficultyBounds,
    master_seed: u64,
    duration: Duration,
    workers: usize,
) -> Result<RunStats, PipelineError> {
    let pool = build_pool(workers.max(1))?;
    let limits = Limits {
        count: u64::MAX,
        max_attempts: u64::MAX,
        deadline: Some(Instant::now() + duration),
    };
    Ok(drive(task, bounds, master_seed, limits, &pool, |_| {}))
}

/// Writes one JSON record per line.
pub fn write_jsonl<W: Write>(records: &[Record], mut out: W) -> Result<(), PipelineError> {
    for r in records {
        serde_json::to_writer(&mut out, r)?;
        out.write_all(b"\n")?;
    }
    out.flush()?;
    Ok(())
}

/// Writes `{"<task>": [{"input": .., "output": ..}, ..]}` with task keys
/// sorted.
pub fn write_arc_json<W: Write>(records: &[Record], mut out: W) -> Result<(), PipelineError> {
    let mut by_task: BTreeMap<&str, Vec<Example>> = BTreeMap::new();
    for r in records {
        by_task.entry(&r.task).or_default().push(r.example());
    }
    serde_json::to_writer(&mut out, &by_task)?;
    out.write_all(b"\n")?;
    out.flush()?;
    Ok(())
}

pub fn write_records<W: Write>(records: &[Record], format: Format, out: W) -> Result<(), PipelineError> {
    match format {
        Format::Jsonl => write_jsonl(records, out),
        Format::ArcJson => write_arc_json(records, out),
    }
}

pub fn read_jsonl<R: BufRead>(input: R) -> Result<Vec<Record>, PipelineError> {
    let mut records = Vec::new();
    for (n, line) in input.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let record = serde_json::from_str(&line)
            .map_err(|e| PipelineError::Parse(format!("line {}: {e}", n + 1)))?;
        records.push(record);
    }
    Ok(records)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SplitFile {
    #[serde(default)]
    train: Vec<Example>,
    #[serde(default)]
    test: Vec<Example>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum ExampleFile {
    Split(SplitFile),
    List(Vec<Example>),
    ByTask(BTreeMap<String, Vec<Example>>),
}

/// Reads examples for `task` from any of: an ARC task file
/// (`{"train": [..], "test": [..]}`), a plain list of examples, the keyed
/// ARC-style export, or JSONL records.
pub fn read_examples(text: &str, task: &str) -> Result<Vec<Example>, PipelineError> {
    if let Ok(file) = serde_json::from_str::<ExampleFile>(text) {
        return match file {
            ExampleFile::Split(SplitFile { mut train, test }) => {
                train.extend(test);
                if train.is_empty() {
                    return Err(PipelineError::Parse("no examples found".into()));
                }
                Ok(train)
            }
            ExampleFile::List(list) => Ok(list),
            ExampleFile::ByTask(mut map) => map
                .remove(task)
                .ok_or_else(|| PipelineError::Parse(format!("no entry for task {task:?}"))),
        };
    }
    let records = read_jsonl(text.as_bytes())?;
    if records.is_empty() {
        return Err(PipelineError::Parse("no examples found".into()));
    }
    Ok(records
        .iter()
        .filter(|r| r.task == task)
        .map(Record::example)
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BandMetric {
    Rng,
    Pso,
}

impl BandMetric {
    pub fn of(self, r: &Record) -> f64 {
        match self {
            BandMetric::Rng => r.rng_difficulty,
            BandMetric::Pso => r.pso_difficulty,
        }
    }
}

/// Band index of each value for `k` equal-width bins over `[min, max]` of
/// the values. All values share band 0 when they are equal.
pub fn band_indices(values: &[f64], k: usize) -> Vec<usize> {
    let k = k.max(1);
    let min = values.iter().copied().fold(f64::INFINITY, f64::min);
    let max = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let width = max - min;
    values
        .iter()
        .map(|&v| {
            if width > 0.0 {
                (((v - min) / width * k as f64).floor() as usize).min(k - 1)
            } else {
                0
            }
        })
        .collect()
}

/// Splits records into `k` difficulty bands, easiest first. Bands may be
/// empty; within a band records keep their original order.
pub fn band_by_difficulty(
    records: &[Record],
    metric: BandMetric,
    k: usize,
) -> Result<Vec<Vec<Record>>, PipelineError> {
    if k == 0 {
        return Err(PipelineError::Config("band count must be at least 1".into()));
    }
    if records.is_empty() {
        return Err(PipelineError::Config("cannot band an empty dataset".into()));
    }
    let values: Vec<f64> = records.iter().map(|r| metric.of(r)).collect();
    let mut bands = vec![Vec::new(); k];
    for (r, b) in records.iter().zip(band_indices(&values, k)) {
        bands[b].push(r.clone());
    }
    Ok(bands)
}
