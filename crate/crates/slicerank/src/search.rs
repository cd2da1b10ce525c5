//! Parallel shard execution with a wall-clock deadline and an append-only
//! checkpoint file for resuming long rank passes.

use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, Mutex};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use rayon::ThreadPool;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use slicerank_core::linalg::Shard;
use slicerank_core::slicerank::{CubicMembership, RankPass, ScanMode, SearchBudget, ShardExecutor, ShardOutcome};
use slicerank_core::{Error, Fp, Polynomial, Subspace};

/// Search limits and parallelism, as configured on the command line.
#[derive(Clone, Debug, Default)]
pub struct SearchConfig {
    /// `None` uses every available core.
    pub workers: Option<usize>,
    pub max_visits: Option<u64>,
    pub max_seconds: Option<f64>,
    pub checkpoint: Option<PathBuf>,
}

impl SearchConfig {
    pub fn budget(&self) -> SearchBudget {
        self.max_visits.map_or_else(SearchBudget::default, SearchBudget::with_max_visits)
    }

    pub fn executor(&self) -> std::io::Result<ParallelExecutor> {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(self.workers.unwrap_or(0))
            .build()
            .map_err(std::io::Error::other)?;
        let deadline = self.max_seconds.map(|s| Instant::now() + Duration::from_secs_f64(s.max(0.0)));
        let checkpoint = self.checkpoint.as_deref().map(Checkpoint::open).transpose()?;
        Ok(ParallelExecutor {
            pool: Arc::new(pool),
            deadline,
            checkpoint: checkpoint.map(Arc::new),
        })
    }
}

/// Stable identity of a cubic for checkpoint records.
pub fn polynomial_key(f: &Polynomial<Fp>) -> String {
    let mut h = Sha256::new();
    h.update(format!("p={};n={};", f.field().modulus(), f.num_vars()));
    for (m, c) in f.terms() {
        h.update(format!("{:?}:{c};", m.exponents()));
    }
    format!("{:x}", h.finalize())
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct Record {
    key: String,
    rank: usize,
    shard: usize,
    start: u64,
    end: u64,
    visits: u64,
    /// `false` when the scan stopped at its first witness.
    complete: bool,
    witnesses: Vec<Vec<Vec<u32>>>,
}

/// Completed shards, keyed by `(polynomial key, rank, shard index)`.
pub struct Checkpoint {
    done: Mutex<HashMap<(String, usize, usize), Record>>,
    file: Mutex<File>,
}

impl Checkpoint {
    /// Loads existing records (a torn final line is ignored) and opens the
    /// file for appending.
    pub fn open(path: &Path) -> std::io::Result<Self> {
        let mut done = HashMap::new();
        if path.exists() {
            for line in BufReader::new(File::open(path)?).lines() {
                let Ok(rec) = serde_json::from_str::<Record>(&line?) else {
                    continue;
                };
                done.insert((rec.key.clone(), rec.rank, rec.shard), rec);
            }
        }
        let file = OpenOptions::new().create(true).append(true).open(path)?;
        Ok(Checkpoint {
            done: Mutex::new(done),
            file: Mutex::new(file),
        })
    }

    pub fn len(&self) -> usize {
        self.done.lock().expect("checkpoint lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn lookup(&self, key: &str, pass: &RankPass<'_>, shard: &Shard, mode: ScanMode) -> Option<ShardOutcome> {
        let rank = pass.rank;
        let done = self.done.lock().expect("checkpoint lock");
        let rec = done.get(&(key.to_string(), rank, shard.index))?;
        if rec.start != shard.start || rec.end != shard.end || (mode == ScanMode::All && !rec.complete) {
            return None;
        }
        let witnesses = rec
            .witnesses
            .iter()
            .map(|rows| Subspace::from_rows(pass.f.field(), pass.f.num_vars(), rows.clone()))
            .collect::<Result<Vec<_>, _>>()
            .ok()?;
        Some(ShardOutcome {
            shard: shard.index,
            visits: rec.visits,
            witnesses,
        })
    }

    fn record(&self, rec: Record) -> std::io::Result<()> {
        let line = serde_json::to_string(&rec).map_err(std::io::Error::other)?;
        {
            let mut file = self.file.lock().expect("checkpoint lock");
            writeln!(file, "{line}")?;
            file.flush()?;
        }
        self.done.lock().expect("checkpoint lock").insert((rec.key.clone(), rec.rank, rec.shard), rec);
        Ok(())
    }
}

/// Runs shards on a rayon pool. `--workers 1` gives a one-thread pool and
/// therefore fully serial execution.
#[derive(Clone)]
pub struct ParallelExecutor {
    pool: Arc<ThreadPool>,
    deadline: Option<Instant>,
    checkpoint: Option<Arc<Checkpoint>>,
}

impl ParallelExecutor {
    pub fn threads(&self) -> usize {
        self.pool.current_num_threads()
    }

    pub fn install<R: Send>(&self, op: impl FnOnce() -> R + Send) -> R {
        self.pool.install(op)
    }

    pub fn deadline_passed(&self) -> bool {
        self.deadline.is_some_and(|d| Instant::now() >= d)
    }

    fn scan_one(
        &self,
        pass: &RankPass<'_>,
        key: &str,
        tester: &mut CubicMembership,
        shard: &Shard,
        mode: ScanMode,
        visits: &AtomicU64,
    ) -> Result<ShardOutcome, Error> {
        if let Some(cp) = &self.checkpoint {
            if let Some(hit) = cp.lookup(key, pass, shard, mode) {
                visits.fetch_add(hit.visits, Ordering::Relaxed);
                return Ok(hit);
            }
        }
        if self.deadline_passed() {
            return Err(Error::DeadlineReached {
                visits: visits.load(Ordering::Relaxed),
                ranks_excluded: None,
            });
        }
        let out = pass.scan_with(tester, shard, mode);
        visits.fetch_add(out.visits, Ordering::Relaxed);
        if let Some(cp) = &self.checkpoint {
            let rec = Record {
                key: key.to_string(),
                rank: pass.rank,
                shard: shard.index,
                start: shard.start,
                end: shard.end,
                visits: out.visits,
                complete: mode == ScanMode::All || out.witnesses.is_empty(),
                witnesses: out.witnesses.iter().map(|w| w.basis().to_vec()).collect(),
            };
            // A failed write only costs a rescan on resume.
            let _ = cp.record(rec);
        }
        Ok(out)
    }
}

impl ShardExecutor for ParallelExecutor {
    fn run(&self, pass: &RankPass<'_>, mode: ScanMode) -> Result<Vec<ShardOutcome>, Error> {
        CubicMembership::new(pass.f)?;
        let key = polynomial_key(pass.f);
        let visits = AtomicU64::new(0);
        let tester = || CubicMembership::new(pass.f).expect("checked above");
        self.pool.install(|| match mode {
            ScanMode::All => pass
                .shards
                .par_iter()
                .map_init(tester, |t, shard| self.scan_one(pass, &key, t, shard, mode, &visits))
                .collect(),
            ScanMode::First => {
                let batch = 4 * self.pool.current_num_threads().max(1);
                let mut out = Vec::new();
                for chunk in pass.shards.chunks(batch) {
                    let results: Vec<ShardOutcome> = chunk
                        .par_iter()
                        .map_init(tester, |t, shard| self.scan_one(pass, &key, t, shard, mode, &visits))
                        .collect::<Result<_, _>>()?;
                    let hit = results.iter().position(|o| !o.witnesses.is_empty());
                    match hit {
                        Some(i) => {
                            out.extend(results.into_iter().take(i + 1));
                            return Ok(out);
                        }
                        None => out.extend(results),
                    }
                }
                Ok(out)
            }
        })
    }
}
