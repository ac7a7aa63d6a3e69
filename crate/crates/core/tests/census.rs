use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use rfsemi::census::{
    census_in_memory, partitions, read_records, resume, run_census, CensusError, CensusParams, Checkpoint,
};

fn params(dir: &Path, embdim: usize, max_gen: i64, almost_only: bool) -> CensusParams {
    let mut p = CensusParams::new(embdim, max_gen, dir.join("out.jsonl"));
    p.require_almost_symmetric = almost_only;
    p.workers = 2;
    p
}

/// (semigroups seen, type histogram of the almost symmetric ones), from an
/// independent sieve-based enumeration.
fn oracle(embdim: usize, max_gen: i64) -> (u64, Vec<(usize, u64)>) {
    match (embdim, max_gen) {
        (3, 20) => (436, vec![(1, 164), (2, 29)]),
        (4, 20) => (818, vec![(1, 109), (2, 33), (3, 66)]),
        (5, 20) => (915, vec![(1, 71), (2, 30), (3, 59), (4, 29), (5, 1)]),
        (5, 30) => (15155, vec![(1, 694), (2, 192), (3, 491), (4, 137), (5, 6)]),
        (4, 40) => (28106, vec![(1, 2526), (2, 323), (3, 659)]),
        (3, 40) => (5067, vec![(1, 1836), (2, 115)]),
        _ => unreachable!(),
    }
}

#[test]
fn counts_match_independent_enumeration() {
    let dir = tempfile::tempdir().unwrap();
    for (e, g) in [(3, 20), (4, 20), (5, 20), (5, 30), (4, 40), (3, 40)] {
        let (records, summary) = census_in_memory(&params(dir.path(), e, g, false)).unwrap();
        let mut hist: BTreeMap<usize, u64> = BTreeMap::new();
        for r in records.iter().filter(|r| r.almost_symmetric) {
            *hist.entry(r.semigroup_type).or_default() += 1;
        }
        let (seen, expected) = oracle(e, g);
        assert_eq!(summary.semigroups_seen, seen, "e={e} g={g}");
        assert_eq!(records.len() as u64, seen);
        assert_eq!(hist.into_iter().collect::<Vec<_>>(), expected, "e={e} g={g}");
        assert!(summary.is_clean(), "{:?}", summary.violations);
    }
}

#[test]
fn smallest_five_generator_record() {
    let dir = tempfile::tempdir().unwrap();
    let (records, summary) = census_in_memory(&params(dir.path(), 5, 9, true)).unwrap();
    assert_eq!(records.len(), 1);
    let r = &records[0];
    assert_eq!(r.gens, [5, 6, 7, 8, 9]);
    assert_eq!((r.frobenius, r.semigroup_type, r.n_bad), (4, 4, 0));
    assert_eq!(r.pf, [1, 2, 3, 4]);
    assert!(summary.complete);
}

#[test]
fn file_output_matches_in_memory_records() {
    let dir = tempfile::tempdir().unwrap();
    let p = params(dir.path(), 5, 30, true);
    let summary = run_census(&p).unwrap();
    assert!(summary.complete && summary.is_clean());
    let (records, mem) = census_in_memory(&p).unwrap();
    assert_eq!(read_records(&p.output_path).unwrap(), records);
    assert_eq!(summary.records_emitted, mem.records_emitted);
    assert_eq!(summary.type_histogram, mem.type_histogram);

    let line = fs::read_to_string(&p.output_path)
        .unwrap()
        .lines()
        .next()
        .unwrap()
        .to_string();
    let v: serde_json::Value = serde_json::from_str(&line).unwrap();
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    for k in [
        "gens",
        "frobenius",
        "genus",
        "type",
        "pf",
        "almost_symmetric",
        "n_good",
        "n_bad",
        "bad_values",
        "bad_is_half_frobenius",
        "bad_config_ids",
    ] {
        assert!(keys.contains(&k), "missing {k}");
    }
}

#[test]
fn output_is_independent_of_worker_count() {
    let dir = tempfile::tempdir().unwrap();
    let mut outputs = Vec::new();
    for workers in [1, 3, 8] {
        let mut p = params(dir.path(), 5, 26, true);
        p.workers = workers;
        p.output_path = dir.path().join(format!("w{workers}.jsonl"));
        p.checkpoint_path = dir.path().join(format!("w{workers}.ckpt"));
        run_census(&p).unwrap();
        outputs.push(fs::read(&p.output_path).unwrap());
    }
    assert!(!outputs[0].is_empty());
    assert!(outputs.iter().all(|o| *o == outputs[0]));
}

#[test]
fn interrupted_run_resumes_to_identical_output() {
    let dir = tempfile::tempdir().unwrap();
    let mut full = params(dir.path(), 5, 28, true);
    full.output_path = dir.path().join("full.jsonl");
    full.checkpoint_path = dir.path().join("full.ckpt");
    let reference = run_census(&full).unwrap();

    let total = partitions(5, 28).len();
    let mut p = params(dir.path(), 5, 28, true);
    p.partition_limit = Some(total / 2);
    let partial = run_census(&p).unwrap();
    assert!(!partial.complete);
    assert_eq!(partial.partitions_done, total / 2);
    assert!(!p.output_path.exists());
    assert_eq!(Checkpoint::load(&p.checkpoint_path).unwrap().done.len(), total / 2);

    p.partition_limit = None;
    p.workers = 3;
    let resumed = resume(&p).unwrap();
    assert!(resumed.complete);
    assert_eq!(resumed.partitions_done, total);
    assert_eq!(resumed.records_emitted, reference.records_emitted);
    assert_eq!(resumed.type_histogram, reference.type_histogram);
    assert_eq!(fs::read(&p.output_path).unwrap(), fs::read(&full.output_path).unwrap());
}

#[test]
fn resume_rejects_changed_parameters() {
    let dir = tempfile::tempdir().unwrap();
    let mut p = params(dir.path(), 5, 24, true);
    p.partition_limit = Some(3);
    run_census(&p).unwrap();

    let mut other = p.clone();
    other.max_gen = 25;
    other.partition_limit = None;
    assert!(matches!(resume(&other), Err(CensusError::CheckpointMismatch(_))));

    let mut other = p.clone();
    other.require_almost_symmetric = false;
    assert!(matches!(resume(&other), Err(CensusError::CheckpointMismatch(_))));
}

#[test]
fn resume_without_checkpoint_fails() {
    let dir = tempfile::tempdir().unwrap();
    let p = params(dir.path(), 5, 24, true);
    assert!(matches!(resume(&p), Err(CensusError::CheckpointMismatch(_))));
}

#[test]
fn tampered_checkpoint_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let mut p = params(dir.path(), 5, 24, true);
    p.partition_limit = Some(2);
    run_census(&p).unwrap();
    let text = fs::read_to_string(&p.checkpoint_path).unwrap();
    assert!(text.contains("max_gen 24\n"));
    fs::write(&p.checkpoint_path, text.replace("max_gen 24", "max_gen 23")).unwrap();
    assert!(resume(&p).is_err());
}

#[test]
fn invalid_parameters_are_rejected() {
    let dir = tempfile::tempdir().unwrap();
    for (e, g) in [(2, 10), (7, 10), (5, 4)] {
        let p = params(dir.path(), e, g, true);
        assert!(
            matches!(run_census(&p), Err(CensusError::InvalidParams(_))),
            "e={e} g={g}"
        );
    }
    let mut p = params(dir.path(), 5, 20, true);
    p.workers = 0;
    assert!(matches!(run_census(&p), Err(CensusError::InvalidParams(_))));
}
