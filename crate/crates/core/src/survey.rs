//! Survey of all numerical semigroups up to a Frobenius bound, classifying
//! each as symmetric, cyclotomic and complete intersection, and collecting
//! cyclotomic semigroups that are not complete intersections.
//!
//! The semigroup tree is cut into a fixed set of subtree roots, which are
//! explored in parallel; per-root results are merged and sorted by
//! `(frobenius, min_gens)`, so the output does not depend on the worker count.

use std::collections::BTreeMap;
use std::fs::{self, File};
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numsgp::{enumerate_subtree, CiMemo, Limit, NumericalSemigroup};

pub const RECORDS_FILE: &str = "records.jsonl";
pub const SUMMARY_FILE: &str = "summary.json";
pub const CHECKPOINT_FILE: &str = "checkpoint.json";

/// Number of subtree roots the tree is cut into before parallel exploration.
/// Fixed so that checkpoints stay valid across worker counts.
const TARGET_ROOTS: usize = 256;

#[derive(Clone, Debug)]
pub struct SurveyConfig {
    pub max_frobenius: u64,
    pub workers: usize,
    pub out_path: Option<PathBuf>,
    /// Visited-node interval between checkpoints; 0 disables them.
    pub checkpoint_every: u64,
    pub symmetric_prefilter: bool,
    pub emit_all: bool,
    pub resume: bool,
    /// Stop after this many subtrees, leaving a checkpoint to resume from.
    pub root_budget: Option<usize>,
}

impl SurveyConfig {
    pub fn new(max_frobenius: u64) -> Self {
        SurveyConfig {
            max_frobenius,
            workers: 1,
            out_path: None,
            checkpoint_every: 0,
            symmetric_prefilter: true,
            emit_all: false,
            resume: false,
            root_budget: None,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.workers == 0 {
            return Err(Error::InvalidConfig("workers must be at least 1".into()));
        }
        if (self.checkpoint_every > 0 || self.resume || self.root_budget.is_some())
            && self.out_path.is_none()
        {
            return Err(Error::InvalidConfig(
                "checkpointing needs an output directory".into(),
            ));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurveyRecord {
    pub min_gens: Vec<u64>,
    pub frobenius: i64,
    pub genus: u64,
    pub symmetric: bool,
    pub cyclotomic: bool,
    pub ci: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub factorization: Option<Vec<(u64, u32)>>,
}

impl SurveyRecord {
    fn sort_key(&self) -> (i64, &[u64]) {
        (self.frobenius, &self.min_gens)
    }

    pub fn is_counterexample(&self) -> bool {
        self.cyclotomic && !self.ci
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Totals {
    pub semigroups: u64,
    pub symmetric: u64,
    pub cyclotomic: u64,
    pub ci: u64,
}

impl Totals {
    fn add(&mut self, o: &Totals) {
        self.semigroups += o.semigroups;
        self.symmetric += o.symmetric;
        self.cyclotomic += o.cyclotomic;
        self.ci += o.ci;
    }
}

/// Results for a part of the tree. Merging is associative and commutative
/// once records are put in canonical order.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
struct Partial {
    totals: Totals,
    histogram: BTreeMap<i64, Totals>,
    records: Vec<SurveyRecord>,
    nodes: u64,
}

impl Partial {
    fn merge(&mut self, other: Partial) {
        self.totals.add(&other.totals);
        for (f, t) in &other.histogram {
            self.histogram.entry(*f).or_default().add(t);
        }
        self.records.extend(other.records);
        self.nodes += other.nodes;
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SurveyReport {
    pub bound: u64,
    pub symmetric_prefilter: bool,
    pub totals: Totals,
    pub counterexamples: Vec<SurveyRecord>,
    pub histogram: BTreeMap<i64, Totals>,
    pub nodes_visited: u64,
    pub runtime_secs: f64,
    #[serde(skip)]
    pub records: Vec<SurveyRecord>,
}

impl SurveyReport {
    pub fn conjecture_holds(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

#[derive(Serialize, Deserialize)]
struct Checkpoint {
    bound: u64,
    symmetric_prefilter: bool,
    emit_all: bool,
    pending_roots: Vec<Vec<u64>>,
    done: Partial,
}

struct Classifier<'a> {
    memo: &'a CiMemo,
    prefilter: bool,
    emit_all: bool,
}

impl Classifier<'_> {
    fn visit(&self, s: &NumericalSemigroup, acc: &mut Partial) {
        acc.nodes += 1;
        // N is outside the survey
        if s.is_naturals() {
            return;
        }
        let symmetric = s.is_symmetric();
        let factorization = if symmetric || !self.prefilter {
            let fac = s.cyclotomic_factorization();
            fac.is_kronecker().then_some(fac.factors)
        } else {
            None
        };
        let cyclotomic = factorization.is_some();
        let ci = cyclotomic && self.memo.decide(s).is_some();
        let t = Totals {
            semigroups: 1,
            symmetric: symmetric as u64,
            cyclotomic: cyclotomic as u64,
            ci: ci as u64,
        };
        acc.totals.add(&t);
        acc.histogram.entry(s.frobenius()).or_default().add(&t);
        if cyclotomic || self.emit_all {
            acc.records.push(SurveyRecord {
                min_gens: s.min_gens().to_vec(),
                frobenius: s.frobenius(),
                genus: s.genus(),
                symmetric,
                cyclotomic,
                ci,
                factorization,
            });
        }
    }
}

/// Breadth-first expansion from `N`, one tree level at a time, until there
/// are enough subtree roots. Expanded nodes are classified into the returned
/// partial.
fn split_frontier(limit: Limit, classifier: &Classifier) -> (Vec<NumericalSemigroup>, Partial) {
    let mut inner = Partial::default();
    let mut frontier = vec![NumericalSemigroup::naturals()];
    while !frontier.is_empty() && frontier.len() < TARGET_ROOTS {
        let mut next = Vec::new();
        for s in &frontier {
            classifier.visit(s, &mut inner);
            next.extend(s.children(limit));
        }
        frontier = next;
    }
    (frontier, inner)
}

fn write_checkpoint(dir: &Path, cp: &Checkpoint) -> Result<()> {
    let path = dir.join(CHECKPOINT_FILE);
    let tmp = dir.join(format!("{CHECKPOINT_FILE}.tmp"));
    let body = serde_json::to_vec(cp)?;
    fs::write(&tmp, body).map_err(|e| Error::io(&tmp, e))?;
    fs::rename(&tmp, &path).map_err(|e| Error::io(&path, e))
}

fn read_checkpoint(dir: &Path) -> Result<Option<Checkpoint>> {
    let path = dir.join(CHECKPOINT_FILE);
    match fs::read(&path) {
        Ok(bytes) => Ok(Some(serde_json::from_slice(&bytes)?)),
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(None),
        Err(e) => Err(Error::io(path, e)),
    }
}

struct Progress {
    pending: BTreeMap<usize, Vec<u64>>,
    done: Partial,
    visited: u64,
    last_checkpoint: u64,
}

fn checkpoint_of(config: &SurveyConfig, prog: &Progress) -> Checkpoint {
    Checkpoint {
        bound: config.max_frobenius,
        symmetric_prefilter: config.symmetric_prefilter,
        emit_all: config.emit_all,
        pending_roots: prog.pending.values().cloned().collect(),
        done: prog.done.clone(),
    }
}

/// Runs the survey and, when `out_path` is set, writes `records.jsonl` and
/// `summary.json` there.
pub fn run_survey(config: &SurveyConfig) -> Result<SurveyReport> {
    config.validate()?;
    let started = Instant::now();
    let limit = Limit::MaxFrobenius(config.max_frobenius);
    let memo = CiMemo::new();
    let classifier = Classifier {
        memo: &memo,
        prefilter: config.symmetric_prefilter,
        emit_all: config.emit_all,
    };
    if let Some(dir) = &config.out_path {
        fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    }

    let resumed = match (&config.out_path, config.resume) {
        (Some(dir), true) => read_checkpoint(dir)?,
        _ => None,
    };
    let (roots, done) = match resumed {
        Some(cp) => {
            if cp.bound != config.max_frobenius
                || cp.symmetric_prefilter != config.symmetric_prefilter
                || cp.emit_all != config.emit_all
            {
                return Err(Error::InvalidConfig(
                    "checkpoint was written with a different configuration".into(),
                ));
            }
            let roots = cp
                .pending_roots
                .iter()
                .map(|g| NumericalSemigroup::from_generators(g))
                .collect::<Result<Vec<_>>>()?;
            (roots, cp.done)
        }
        None => split_frontier(limit, &classifier),
    };

    let progress = Mutex::new(Progress {
        pending: roots
            .iter()
            .enumerate()
            .map(|(i, r)| (i, r.min_gens().to_vec()))
            .collect(),
        done,
        visited: 0,
        last_checkpoint: 0,
    });
    let started_roots = AtomicUsize::new(0);
    let checkpoint_error: Mutex<Option<Error>> = Mutex::new(None);

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers)
        .build()
        .map_err(|e| Error::InvalidConfig(e.to_string()))?;
    pool.install(|| {
        roots.par_iter().enumerate().for_each(|(idx, root)| {
            if let Some(budget) = config.root_budget {
                if started_roots.fetch_add(1, Ordering::Relaxed) >= budget {
                    return;
                }
            }
            let mut part = Partial::default();
            enumerate_subtree(root.clone(), limit, |s| classifier.visit(s, &mut part));
            let mut prog = progress.lock().expect("progress poisoned");
            prog.visited += part.nodes;
            let seen = prog.visited;
            prog.pending.remove(&idx);
            prog.done.merge(part);
            if config.checkpoint_every > 0 && seen - prog.last_checkpoint >= config.checkpoint_every
            {
                prog.last_checkpoint = seen;
                let dir = config.out_path.as_ref().expect("validated");
                if let Err(e) = write_checkpoint(dir, &checkpoint_of(config, &prog)) {
                    checkpoint_error.lock().expect("poisoned").get_or_insert(e);
                }
            }
        });
    });
    if let Some(e) = checkpoint_error.into_inner().expect("poisoned") {
        return Err(e);
    }

    let prog = progress.into_inner().expect("progress poisoned");
    if !prog.pending.is_empty() {
        let dir = config.out_path.as_ref().expect("validated");
        write_checkpoint(dir, &checkpoint_of(config, &prog))?;
        return Err(Error::Interrupted(prog.pending.len()));
    }
    let mut all = prog.done;
    all.records.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    let report = SurveyReport {
        bound: config.max_frobenius,
        symmetric_prefilter: config.symmetric_prefilter,
        totals: all.totals,
        counterexamples: all
            .records
            .iter()
            .filter(|r| r.is_counterexample())
            .cloned()
            .collect(),
        histogram: all.histogram,
        nodes_visited: all.nodes,
        runtime_secs: started.elapsed().as_secs_f64(),
        records: all.records,
    };
    if let Some(dir) = &config.out_path {
        write_report(&report, dir)?;
        let cp = dir.join(CHECKPOINT_FILE);
        if cp.exists() {
            fs::remove_file(&cp).map_err(|e| Error::io(&cp, e))?;
        }
    }
    Ok(report)
}

/// Writes `records.jsonl` (one record per line) and `summary.json` into `dir`.
pub fn write_report(report: &SurveyReport, dir: &Path) -> Result<()> {
    fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    let records_path = dir.join(RECORDS_FILE);
    let file = File::create(&records_path).map_err(|e| Error::io(&records_path, e))?;
    let mut out = BufWriter::new(file);
    for r in &report.records {
        serde_json::to_writer(&mut out, r)?;
        out.write_all(b"\n")
            .map_err(|e| Error::io(&records_path, e))?;
    }
    out.flush().map_err(|e| Error::io(&records_path, e))?;
    let summary_path = dir.join(SUMMARY_FILE);
    let summary = serde_json::to_vec_pretty(report)?;
    fs::write(&summary_path, summary).map_err(|e| Error::io(&summary_path, e))
}

pub fn read_records(path: &Path) -> Result<Vec<SurveyRecord>> {
    let file = File::open(path).map_err(|e| Error::io(path, e))?;
    let mut out = Vec::new();
    for (i, line) in BufReader::new(file).lines().enumerate() {
        let line = line.map_err(|e| Error::io(path, e))?;
        if line.trim().is_empty() {
            continue;
        }
        let rec = serde_json::from_str(&line).map_err(|e| Error::MalformedRecord {
            path: path.to_path_buf(),
            line: i + 1,
            message: e.to_string(),
        })?;
        out.push(rec);
    }
    Ok(out)
}

pub fn read_summary(path: &Path) -> Result<SurveyReport> {
    let bytes = fs::read(path).map_err(|e| Error::io(path, e))?;
    Ok(serde_json::from_slice(&bytes)?)
}
