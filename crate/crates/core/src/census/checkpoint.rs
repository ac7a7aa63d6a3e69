//! Flat-text checkpoint: the run parameters, their hash, and one `done g1 g2`
//! line per completed partition. Saved by write-then-rename.

use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

use super::{CensusError, CensusParams};

const HEADER: &str = "# rfsemi census checkpoint v1";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Checkpoint {
    pub hash: String,
    pub embdim: usize,
    pub max_gen: i64,
    pub require_almost_symmetric: bool,
    pub rf_cap: usize,
    pub output_path: PathBuf,
    pub done: BTreeSet<(i64, i64)>,
}

/// Hash of everything that influences the records, excluding paths and worker count.
pub fn params_hash(p: &CensusParams) -> String {
    let canon = format!(
        "embdim={};max_gen={};almost_symmetric={};rf_cap={}",
        p.embdim, p.max_gen, p.require_almost_symmetric, p.rf_cap
    );
    let digest = Sha256::digest(canon.as_bytes());
    digest[..8].iter().map(|b| format!("{b:02x}")).collect()
}

impl Checkpoint {
    pub fn for_params(p: &CensusParams) -> Self {
        Checkpoint {
            hash: params_hash(p),
            embdim: p.embdim,
            max_gen: p.max_gen,
            require_almost_symmetric: p.require_almost_symmetric,
            rf_cap: p.rf_cap,
            output_path: p.output_path.clone(),
            done: BTreeSet::new(),
        }
    }

    /// Parameters recorded in the checkpoint, run with `workers` threads.
    pub fn to_params(&self, checkpoint_path: &Path, workers: usize) -> CensusParams {
        CensusParams {
            embdim: self.embdim,
            max_gen: self.max_gen,
            require_almost_symmetric: self.require_almost_symmetric,
            workers,
            rf_cap: self.rf_cap,
            output_path: self.output_path.clone(),
            checkpoint_path: checkpoint_path.to_path_buf(),
            partition_limit: None,
        }
    }

    pub fn render(&self) -> String {
        let mut out = format!(
            "{HEADER}\nhash {}\nembdim {}\nmax_gen {}\nalmost_symmetric {}\nrf_cap {}\noutput {}\n",
            self.hash,
            self.embdim,
            self.max_gen,
            self.require_almost_symmetric,
            self.rf_cap,
            self.output_path.display()
        );
        for (g1, g2) in &self.done {
            out.push_str(&format!("done {g1} {g2}\n"));
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self, CensusError> {
        let bad = |msg: String| CensusError::CheckpointMismatch(msg);
        let mut lines = text.lines();
        if lines.next() != Some(HEADER) {
            return Err(bad("missing checkpoint header".into()));
        }
        let mut hash = None;
        let mut embdim = None;
        let mut max_gen = None;
        let mut almost = None;
        let mut rf_cap = None;
        let mut output = None;
        let mut done = BTreeSet::new();
        for line in lines.filter(|l| !l.trim().is_empty()) {
            let (key, value) = line
                .split_once(' ')
                .ok_or_else(|| bad(format!("malformed line {line:?}")))?;
            let num = |v: &str| {
                v.trim()
                    .parse::<i64>()
                    .map_err(|_| bad(format!("malformed line {line:?}")))
            };
            match key {
                "hash" => hash = Some(value.trim().to_string()),
                "embdim" => embdim = Some(num(value)? as usize),
                "max_gen" => max_gen = Some(num(value)?),
                "almost_symmetric" => {
                    almost = Some(
                        value
                            .trim()
                            .parse::<bool>()
                            .map_err(|_| bad(format!("malformed line {line:?}")))?,
                    )
                }
                "rf_cap" => rf_cap = Some(num(value)? as usize),
                "output" => output = Some(PathBuf::from(value)),
                "done" => {
                    let (a, b) = value
                        .split_once(' ')
                        .ok_or_else(|| bad(format!("malformed line {line:?}")))?;
                    done.insert((num(a)?, num(b)?));
                }
                _ => return Err(bad(format!("unknown key {key:?}"))),
            }
        }
        let missing = |k: &str| bad(format!("checkpoint lacks {k}"));
        let cp = Checkpoint {
            hash: hash.ok_or_else(|| missing("hash"))?,
            embdim: embdim.ok_or_else(|| missing("embdim"))?,
            max_gen: max_gen.ok_or_else(|| missing("max_gen"))?,
            require_almost_symmetric: almost.ok_or_else(|| missing("almost_symmetric"))?,
            rf_cap: rf_cap.ok_or_else(|| missing("rf_cap"))?,
            output_path: output.ok_or_else(|| missing("output"))?,
            done,
        };
        let recomputed = params_hash(&cp.to_params(Path::new(""), 1));
        if recomputed != cp.hash {
            return Err(bad("stored hash does not match stored parameters".into()));
        }
        Ok(cp)
    }

    pub fn load(path: &Path) -> Result<Self, CensusError> {
        let text = fs::read_to_string(path)
            .map_err(|_| CensusError::CheckpointMismatch(format!("no readable checkpoint at {}", path.display())))?;
        Self::parse(&text)
    }

    pub fn save(&self, path: &Path) -> Result<(), CensusError> {
        super::write_atomically(path, self.render().as_bytes())
    }
}
