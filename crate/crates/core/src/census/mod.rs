//! Exhaustive census of numerical semigroups with a fixed embedding
//! dimension and bounded minimal generators.
//!
//! Work is split into `(g1, g2)` prefixes. Workers claim prefixes from a
//! shared counter, analyze every semigroup in the prefix and write one shard
//! per prefix; the coordinating thread records finished prefixes in the
//! checkpoint. Once every prefix is done the shards are concatenated in
//! prefix order, which is lexicographic order of generator tuples, so the
//! output does not depend on the number of workers.

mod battery;
mod checkpoint;
mod enumerate;

use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::io::{self, BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::sync::mpsc;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use battery::{CensusRecord, Violation, GOOD_BOUND_E5, TYPE_BOUND_E5};
pub use checkpoint::{params_hash, Checkpoint};
pub use enumerate::{enumerate_minimal_tuples, enumerate_partition, partitions};

#[derive(Debug, Error)]
pub enum CensusError {
    #[error("invalid census parameters: {0}")]
    InvalidParams(String),
    #[error("I/O error on {path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("checkpoint mismatch: {0}")]
    CheckpointMismatch(String),
    #[error("malformed shard {path}: {source}")]
    Shard { path: PathBuf, source: serde_json::Error },
}

fn io_err(path: &Path) -> impl FnOnce(io::Error) -> CensusError + '_ {
    move |source| CensusError::Io {
        path: path.to_path_buf(),
        source,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusParams {
    pub embdim: usize,
    pub max_gen: i64,
    pub require_almost_symmetric: bool,
    pub workers: usize,
    pub rf_cap: usize,
    pub output_path: PathBuf,
    pub checkpoint_path: PathBuf,
    /// Stop after this many partitions have been completed in one invocation.
    pub partition_limit: Option<usize>,
}

impl CensusParams {
    /// Almost-symmetric filter on, one worker per core, checkpoint next to the output.
    pub fn new(embdim: usize, max_gen: i64, output_path: impl Into<PathBuf>) -> Self {
        let output_path = output_path.into();
        let mut checkpoint_path = output_path.clone().into_os_string();
        checkpoint_path.push(".ckpt");
        CensusParams {
            embdim,
            max_gen,
            require_almost_symmetric: true,
            workers: std::thread::available_parallelism().map_or(1, |n| n.get()),
            rf_cap: crate::rfmatrix::DEFAULT_CAP,
            output_path,
            checkpoint_path: checkpoint_path.into(),
            partition_limit: None,
        }
    }

    pub fn validate(&self) -> Result<(), CensusError> {
        let bad = |m: String| Err(CensusError::InvalidParams(m));
        if !(3..=6).contains(&self.embdim) {
            return bad(format!("embdim must be in 3..=6, got {}", self.embdim));
        }
        if self.max_gen < self.embdim as i64 {
            return bad(format!("max_gen {} is below embdim {}", self.max_gen, self.embdim));
        }
        if self.workers == 0 {
            return bad("workers must be at least 1".into());
        }
        if self.rf_cap == 0 {
            return bad("rf_cap must be at least 1".into());
        }
        Ok(())
    }

    fn shard_dir(&self) -> PathBuf {
        let mut dir = self.output_path.clone().into_os_string();
        dir.push(".shards");
        dir.into()
    }
}

/// Aggregates over one partition; summed into [`CensusSummary`].
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct PartitionStats {
    pub semigroups_seen: u64,
    pub almost_symmetric_seen: u64,
    pub records_emitted: u64,
    pub type_histogram: BTreeMap<usize, u64>,
    pub max_n_bad: usize,
    pub records_with_bad: u64,
    pub records_bad_not_half: u64,
    pub lambda_one_records: u64,
    pub violations: Vec<Violation>,
}

impl PartitionStats {
    fn merge(&mut self, other: &PartitionStats) {
        self.semigroups_seen += other.semigroups_seen;
        self.almost_symmetric_seen += other.almost_symmetric_seen;
        self.records_emitted += other.records_emitted;
        for (t, c) in &other.type_histogram {
            *self.type_histogram.entry(*t).or_default() += c;
        }
        self.max_n_bad = self.max_n_bad.max(other.max_n_bad);
        self.records_with_bad += other.records_with_bad;
        self.records_bad_not_half += other.records_bad_not_half;
        self.lambda_one_records += other.lambda_one_records;
        self.violations.extend(other.violations.iter().cloned());
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CensusSummary {
    pub embdim: usize,
    pub max_gen: i64,
    pub almost_symmetric_only: bool,
    /// Every semigroup visited, almost symmetric or not.
    pub semigroups_seen: u64,
    pub almost_symmetric_seen: u64,
    pub records_emitted: u64,
    /// Maximum type among emitted records.
    pub max_type: usize,
    pub type_histogram: BTreeMap<usize, u64>,
    pub max_n_bad: usize,
    pub records_with_bad: u64,
    /// Records with a bad pseudo-Frobenius number different from F/2.
    pub records_bad_not_half: u64,
    /// Five-generator records where some lambda table entry equals 1.
    pub lambda_one_records: u64,
    pub violations: Vec<Violation>,
    pub partitions_done: usize,
    pub partitions_total: usize,
    pub complete: bool,
    pub wall_time_secs: f64,
}

impl CensusSummary {
    fn from_stats(
        params: &CensusParams,
        mut stats: PartitionStats,
        done: usize,
        total: usize,
        started: Instant,
    ) -> Self {
        stats.violations.sort();
        CensusSummary {
            embdim: params.embdim,
            max_gen: params.max_gen,
            almost_symmetric_only: params.require_almost_symmetric,
            semigroups_seen: stats.semigroups_seen,
            almost_symmetric_seen: stats.almost_symmetric_seen,
            records_emitted: stats.records_emitted,
            max_type: stats.type_histogram.keys().next_back().copied().unwrap_or(0),
            type_histogram: stats.type_histogram,
            max_n_bad: stats.max_n_bad,
            records_with_bad: stats.records_with_bad,
            records_bad_not_half: stats.records_bad_not_half,
            lambda_one_records: stats.lambda_one_records,
            violations: stats.violations,
            partitions_done: done,
            partitions_total: total,
            complete: done == total,
            wall_time_secs: started.elapsed().as_secs_f64(),
        }
    }

    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Analyze every semigroup of one prefix.
pub fn process_partition(params: &CensusParams, prefix: (i64, i64)) -> (Vec<CensusRecord>, PartitionStats) {
    let mut records = Vec::new();
    let mut stats = PartitionStats::default();
    enumerate_partition(params.embdim, params.max_gen, prefix, &mut |s| {
        stats.semigroups_seen += 1;
        let a = battery::analyze(s, params.require_almost_symmetric, params.rf_cap);
        stats.almost_symmetric_seen += a.almost_symmetric as u64;
        stats.lambda_one_records += a.lambda_one as u64;
        stats.violations.extend(a.violations);
        if let Some(r) = a.record {
            stats.records_emitted += 1;
            *stats.type_histogram.entry(r.semigroup_type).or_default() += 1;
            stats.max_n_bad = stats.max_n_bad.max(r.n_bad);
            stats.records_with_bad += (r.n_bad > 0) as u64;
            stats.records_bad_not_half += !r.bad_is_half_frobenius as u64;
            records.push(r);
        }
    });
    (records, stats)
}

/// Run `work` over `pending` on `workers` threads, handing each result to
/// `on_done` on the calling thread in completion order.
fn run_pool<T: Send>(
    workers: usize,
    pending: &[(i64, i64)],
    limit: usize,
    work: impl Fn((i64, i64)) -> Result<T, CensusError> + Sync,
    mut on_done: impl FnMut((i64, i64), T) -> Result<(), CensusError>,
) -> Result<usize, CensusError> {
    let claim = AtomicUsize::new(0);
    let stop = AtomicBool::new(false);
    let take = limit.min(pending.len());
    let (tx, rx) = mpsc::channel();
    let mut completed = 0;
    std::thread::scope(|scope| {
        for _ in 0..workers.min(take.max(1)) {
            let tx = tx.clone();
            let (claim, stop, work) = (&claim, &stop, &work);
            scope.spawn(move || loop {
                if stop.load(Ordering::Relaxed) {
                    break;
                }
                let idx = claim.fetch_add(1, Ordering::Relaxed);
                if idx >= take {
                    break;
                }
                let prefix = pending[idx];
                let res = work(prefix);
                if tx.send((prefix, res)).is_err() {
                    break;
                }
            });
        }
        drop(tx);
        for (prefix, res) in rx {
            match res.and_then(|t| on_done(prefix, t)) {
                Ok(()) => completed += 1,
                Err(e) => {
                    stop.store(true, Ordering::Relaxed);
                    return Err(e);
                }
            }
        }
        Ok(completed)
    })
}

/// Run the whole census in memory, returning records sorted by generators.
pub fn census_in_memory(params: &CensusParams) -> Result<(Vec<CensusRecord>, CensusSummary), CensusError> {
    params.validate()?;
    let started = Instant::now();
    let all = partitions(params.embdim, params.max_gen);
    let mut by_prefix = BTreeMap::new();
    let mut stats = PartitionStats::default();
    run_pool(
        params.workers,
        &all,
        usize::MAX,
        |prefix| Ok(process_partition(params, prefix)),
        |prefix, (records, s)| {
            stats.merge(&s);
            by_prefix.insert(prefix, records);
            Ok(())
        },
    )?;
    let records: Vec<CensusRecord> = by_prefix.into_values().flatten().collect();
    let summary = CensusSummary::from_stats(params, stats, all.len(), all.len(), started);
    Ok((records, summary))
}

pub(crate) fn write_atomically(path: &Path, bytes: &[u8]) -> Result<(), CensusError> {
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".tmp");
    let tmp = PathBuf::from(tmp);
    fs::write(&tmp, bytes).map_err(io_err(&tmp))?;
    fs::rename(&tmp, path).map_err(io_err(path))
}

fn shard_paths(dir: &Path, (g1, g2): (i64, i64)) -> (PathBuf, PathBuf) {
    (
        dir.join(format!("p{g1:05}_{g2:05}.jsonl")),
        dir.join(format!("p{g1:05}_{g2:05}.stats.json")),
    )
}

/// Start a fresh census, discarding any previous checkpoint and shards.
pub fn run_census(params: &CensusParams) -> Result<CensusSummary, CensusError> {
    params.validate()?;
    let dir = params.shard_dir();
    if dir.exists() {
        fs::remove_dir_all(&dir).map_err(io_err(&dir))?;
    }
    let cp = Checkpoint::for_params(params);
    cp.save(&params.checkpoint_path)?;
    execute(params, cp)
}

/// Continue a census from its checkpoint. The merged output is identical to
/// that of an uninterrupted run.
pub fn resume(params: &CensusParams) -> Result<CensusSummary, CensusError> {
    params.validate()?;
    let cp = Checkpoint::load(&params.checkpoint_path)?;
    if cp.hash != params_hash(params) {
        return Err(CensusError::CheckpointMismatch(format!(
            "checkpoint {} was written for different parameters",
            params.checkpoint_path.display()
        )));
    }
    execute(params, cp)
}

fn execute(params: &CensusParams, mut cp: Checkpoint) -> Result<CensusSummary, CensusError> {
    let started = Instant::now();
    let dir = params.shard_dir();
    fs::create_dir_all(&dir).map_err(io_err(&dir))?;
    let all = partitions(params.embdim, params.max_gen);
    let pending: Vec<(i64, i64)> = all.iter().copied().filter(|p| !cp.done.contains(p)).collect();

    run_pool(
        params.workers,
        &pending,
        params.partition_limit.unwrap_or(usize::MAX),
        |prefix| {
            let (records, stats) = process_partition(params, prefix);
            let (shard, stats_path) = shard_paths(&dir, prefix);
            let mut body = Vec::new();
            for r in &records {
                serde_json::to_writer(&mut body, r).expect("records serialize");
                body.push(b'\n');
            }
            write_atomically(&shard, &body)?;
            let stats_json = serde_json::to_vec(&stats).expect("stats serialize");
            write_atomically(&stats_path, &stats_json)?;
            Ok(())
        },
        |prefix, ()| {
            cp.done.insert(prefix);
            cp.save(&params.checkpoint_path)
        },
    )?;

    let done: BTreeSet<(i64, i64)> = all.iter().copied().filter(|p| cp.done.contains(p)).collect();
    let mut stats = PartitionStats::default();
    for &prefix in &done {
        let (_, stats_path) = shard_paths(&dir, prefix);
        let text = fs::read(&stats_path).map_err(io_err(&stats_path))?;
        let s: PartitionStats = serde_json::from_slice(&text).map_err(|source| CensusError::Shard {
            path: stats_path,
            source,
        })?;
        stats.merge(&s);
    }
    if done.len() == all.len() {
        merge_shards(&dir, &all, &params.output_path)?;
    }
    Ok(CensusSummary::from_stats(params, stats, done.len(), all.len(), started))
}

fn merge_shards(dir: &Path, all: &[(i64, i64)], output: &Path) -> Result<(), CensusError> {
    let mut tmp = output.as_os_str().to_owned();
    tmp.push(".tmp");
    let tmp = PathBuf::from(tmp);
    {
        let file = fs::File::create(&tmp).map_err(io_err(&tmp))?;
        let mut w = io::BufWriter::new(file);
        for &prefix in all {
            let (shard, _) = shard_paths(dir, prefix);
            let mut r = fs::File::open(&shard).map_err(io_err(&shard))?;
            io::copy(&mut r, &mut w).map_err(io_err(&tmp))?;
        }
        w.flush().map_err(io_err(&tmp))?;
    }
    fs::rename(&tmp, output).map_err(io_err(output))
}

/// Read a JSONL census output back into records.
pub fn read_records(path: &Path) -> Result<Vec<CensusRecord>, CensusError> {
    let file = fs::File::open(path).map_err(io_err(path))?;
    let mut out = Vec::new();
    for line in BufReader::new(file).lines() {
        let line = line.map_err(io_err(path))?;
        if line.trim().is_empty() {
            continue;
        }
        out.push(serde_json::from_str(&line).map_err(|source| CensusError::Shard {
            path: path.to_path_buf(),
            source,
        })?);
    }
    Ok(out)
}
