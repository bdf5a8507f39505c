//! Streaming census over planar_code (or text) input.
//!
//! One decoder thread feeds a bounded queue; `jobs` workers examine graphs
//! with private counters; the calling thread writes survivors in input order.
//! The decoder holds one credit per graph in flight and the writer returns it
//! once that graph's slot has been written, so at most [`REORDER_WINDOW`]
//! outcomes per worker wait for reordering. Any interleaving produces the same
//! counters and the same survivor bytes.

mod counters;
mod verify;

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Mutex;
use std::thread;

use crossbeam_channel::{bounded, unbounded};
use thiserror::Error;

use crate::codec::{
    encode_record, open_embeddings, CodecError, GraphStream, InputError, InputOptions, PlanarCodeWriter,
};
use crate::embedding::PlanarEmbedding;
use crate::graph::Graph;
use crate::grinberg::grinberg_feasible;
use crate::hypo::{classify_deletions, classify_hypohamiltonian_with, verify_certificates, HypoResult};
use crate::invariants::{cyclic_connectivity, faces, girth, CyclicConnectivity};
use crate::solver::{find_hamiltonian_with, HamResult, SolverError, SolverOptions};

pub use counters::{emit_table_row, MissingRow, PipelineCounters, RowCounts};
pub use verify::{cross_verify, independent_is_hamiltonian, sampled, REFERENCE_LIMIT};

/// Queue slots per worker between decoder and workers.
pub const QUEUE_PER_JOB: usize = 4;
/// Reorder-buffer slots per worker.
pub const REORDER_WINDOW: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct EmitClasses {
    pub nonhamiltonian: bool,
    pub hypohamiltonian: bool,
}

#[derive(Debug, Clone)]
pub struct PipelineConfig {
    pub inputs: Vec<PathBuf>,
    pub input: InputOptions,
    /// Graphs with smaller girth are rejected.
    pub min_girth: usize,
    /// When off, graphs are not split by cyclic connectivity and count as
    /// unclassified.
    pub classify_connectivity: bool,
    pub jobs: usize,
    pub survivors: Option<PathBuf>,
    pub emit: EmitClasses,
    /// Fraction of graphs re-decided by the independent route; hypohamiltonian
    /// positives are always re-decided.
    pub verify_rate: f64,
    pub grinberg: bool,
    /// Skip undecodable records that do not end the stream instead of aborting.
    pub skip_bad: bool,
    pub solver: SolverOptions,
    /// Testing hook: flip the primary verdict of this ordinal and force its
    /// cross-check.
    #[doc(hidden)]
    pub inject_fault: Option<u64>,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        PipelineConfig {
            inputs: Vec::new(),
            input: InputOptions::default(),
            min_girth: 5,
            classify_connectivity: true,
            jobs: 1,
            survivors: None,
            emit: EmitClasses {
                nonhamiltonian: true,
                hypohamiltonian: false,
            },
            verify_rate: 0.0,
            grinberg: false,
            skip_bad: false,
            solver: SolverOptions::default(),
            inject_fault: None,
        }
    }
}

impl PipelineConfig {
    pub fn validate(&self) -> Result<(), PipelineError> {
        if self.jobs == 0 {
            return Err(PipelineError::Config("jobs must be at least 1".into()));
        }
        if !(0.0..=1.0).contains(&self.verify_rate) {
            return Err(PipelineError::Config(format!(
                "verify rate {} is outside [0, 1]",
                self.verify_rate
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("input record {record}: {source}")]
    Input {
        record: u64,
        #[source]
        source: InputError,
    },
    #[error("survivor output: {0}")]
    Output(#[from] io::Error),
    /// Two routes disagreed, or a checked invariant failed. Carries the
    /// offending graph as planar_code hex for reproduction.
    #[error("graph {ordinal} (n = {n}): {detail}; planar_code record: {record_hex}")]
    Disagreement {
        ordinal: u64,
        n: usize,
        detail: String,
        record_hex: String,
    },
}

impl PipelineError {
    pub fn exit_code(&self) -> i32 {
        match self {
            PipelineError::Input { source, .. } if source.is_unsupported() => 3,
            PipelineError::Config(_) | PipelineError::Input { .. } | PipelineError::Output(_) => 1,
            PipelineError::Disagreement { .. } => 2,
        }
    }
}

impl From<CodecError> for PipelineError {
    fn from(e: CodecError) -> Self {
        match e {
            CodecError::Io(io) => PipelineError::Output(io),
            other => PipelineError::Output(io::Error::other(other)),
        }
    }
}

pub fn record_hex(g: &Graph) -> String {
    let mut bytes = Vec::new();
    if encode_record(g, &mut bytes).is_err() {
        return "<unencodable>".into();
    }
    bytes.iter().fold(String::with_capacity(2 * bytes.len()), |mut s, b| {
        let _ = write!(s, "{b:02x}");
        s
    })
}

/// Runs the census over `cfg.inputs`, writing survivors to `cfg.survivors`.
pub fn process_stream(cfg: &PipelineConfig) -> Result<PipelineCounters, PipelineError> {
    cfg.validate()?;
    let stream = open_embeddings(&cfg.inputs, cfg.input);
    match &cfg.survivors {
        Some(path) => {
            let file = File::create(path)?;
            process_embeddings(stream, cfg, Some(BufWriter::new(file)))
        }
        None => process_embeddings(stream, cfg, None::<io::Sink>),
    }
}

enum Bucket {
    Cyclic4,
    Cyclic5,
    Unclassified,
}

struct Examiner<'a> {
    cfg: &'a PipelineConfig,
    counters: PipelineCounters,
}

impl Examiner<'_> {
    fn fail(ordinal: u64, g: &Graph, detail: impl Into<String>) -> PipelineError {
        PipelineError::Disagreement {
            ordinal,
            n: g.vertex_count(),
            detail: detail.into(),
            record_hex: record_hex(g),
        }
    }

    fn solver_error(ordinal: u64, g: &Graph, e: SolverError) -> PipelineError {
        Self::fail(ordinal, g, format!("solver error: {e}"))
    }

    /// Examines one graph; returns whether it is a survivor.
    fn examine(&mut self, ordinal: u64, e: &PlanarEmbedding) -> Result<bool, PipelineError> {
        let cfg = self.cfg;
        let g = e.graph();
        let row = self.counters.row_mut(g.vertex_count());
        row.total += 1;

        if !g.is_cubic() || !g.is_connected() {
            row.rejected += 1;
            row.rejected_not_cubic += 1;
            return Ok(false);
        }
        let fv = faces(e);
        if let Err(msg) = fv.check_identities(g) {
            return Err(Self::fail(ordinal, g, format!("face identities: {msg}")));
        }
        if girth(g).is_some_and(|k| k < cfg.min_girth) {
            row.rejected += 1;
            row.rejected_girth += 1;
            return Ok(false);
        }
        let bucket = if cfg.classify_connectivity {
            match cyclic_connectivity(g) {
                Ok(CyclicConnectivity::Exact(4)) => Bucket::Cyclic4,
                Ok(CyclicConnectivity::Exact(5)) => Bucket::Cyclic5,
                Ok(_) => {
                    row.rejected += 1;
                    row.rejected_connectivity += 1;
                    return Ok(false);
                }
                Err(err) => return Err(Self::fail(ordinal, g, format!("cyclic connectivity: {err}"))),
            }
        } else {
            Bucket::Unclassified
        };
        match bucket {
            Bucket::Cyclic4 => row.c4 += 1,
            Bucket::Cyclic5 => row.c5 += 1,
            Bucket::Unclassified => row.unclassified += 1,
        }

        let certified = cfg.grinberg && !grinberg_feasible(&fv);
        if certified {
            row.grinberg_certified += 1;
        }
        let mut verdict = if certified {
            // the whole-graph test still runs; it doubles as the soundness check
            classify_hypohamiltonian_with(g, cfg.solver).map_err(|e| Self::solver_error(ordinal, g, e))?
        } else {
            match find_hamiltonian_with(g, cfg.solver).map_err(|e| Self::solver_error(ordinal, g, e))? {
                HamResult::Hamiltonian { cycle, nodes } => {
                    row.solver_nodes += nodes;
                    HypoResult::Hamiltonian { cycle }
                }
                HamResult::NonHamiltonian { nodes } => {
                    row.solver_nodes += nodes;
                    classify_deletions(g, cfg.solver).map_err(|e| Self::solver_error(ordinal, g, e))?
                }
            }
        };
        if certified && matches!(verdict, HypoResult::Hamiltonian { .. }) {
            return Err(Self::fail(
                ordinal,
                g,
                "face vector is Grinberg-infeasible but the solver found a hamiltonian cycle",
            ));
        }

        let faulted = cfg.inject_fault == Some(ordinal);
        if faulted {
            verdict = match verdict {
                HypoResult::Hamiltonian { .. } => HypoResult::NotHypo { witness: 0, nodes: 0 },
                _ => HypoResult::Hamiltonian { cycle: Vec::new() },
            };
        }

        let hamiltonian = matches!(verdict, HypoResult::Hamiltonian { .. });
        let hypo = verdict.is_hypohamiltonian();
        if !hamiltonian {
            match bucket {
                Bucket::Cyclic4 => row.n4 += 1,
                Bucket::Cyclic5 => row.n5 += 1,
                Bucket::Unclassified => row.nonham_unclassified += 1,
            }
        }
        if let HypoResult::Hypohamiltonian { certificates } = &verdict {
            row.h += 1;
            if !verify_certificates(g, certificates) {
                return Err(Self::fail(ordinal, g, "hypohamiltonian certificates do not verify"));
            }
            // hypohamiltonian graphs are cyclically 4-edge-connected
            let at_least_four = match bucket {
                Bucket::Unclassified => {
                    matches!(cyclic_connectivity(g), Ok(CyclicConnectivity::Exact(k)) if k >= 4)
                }
                _ => true,
            };
            if !at_least_four {
                return Err(Self::fail(
                    ordinal,
                    g,
                    "hypohamiltonian graph with cyclic connectivity below 4",
                ));
            }
        }

        if hypo || faulted || sampled(ordinal, cfg.verify_rate) {
            row.cross_verified += 1;
            if !cross_verify(g, &verdict) {
                return Err(Self::fail(
                    ordinal,
                    g,
                    format!("independent check disagrees with primary verdict {}", verdict.tag()),
                ));
            }
        }

        Ok((cfg.emit.nonhamiltonian && !hamiltonian) || (cfg.emit.hypohamiltonian && hypo))
    }
}

/// Core of [`process_stream`] over an arbitrary embedding stream and sink.
///
/// `survivors` receives a planar_code stream (with header) of the selected
/// graphs in input order; nothing is written to it after an error.
pub fn process_embeddings<W: Write + Send>(
    stream: GraphStream<'_, PlanarEmbedding>,
    cfg: &PipelineConfig,
    survivors: Option<W>,
) -> Result<PipelineCounters, PipelineError> {
    cfg.validate()?;
    let jobs = cfg.jobs;
    let (job_tx, job_rx) = bounded::<(u64, PlanarEmbedding)>(QUEUE_PER_JOB * jobs);
    let (done_tx, done_rx) = unbounded::<(u64, Option<Vec<u8>>)>();
    let (credit_tx, credit_rx) = bounded::<()>(REORDER_WINDOW * jobs);
    let abort = AtomicBool::new(false);
    // (ordinal, error); the lowest ordinal wins so reports are deterministic
    let failures: Mutex<Vec<(u64, PipelineError)>> = Mutex::new(Vec::new());
    let fail = |ordinal: u64, e: PipelineError| {
        abort.store(true, Ordering::SeqCst);
        failures.lock().expect("poisoned").push((ordinal, e));
    };

    let mut counters = thread::scope(|s| {
        let decoder = s.spawn(|| {
            let mut skipped = 0u64;
            let mut ordinal = 0u64;
            for (record, item) in stream.enumerate() {
                if abort.load(Ordering::SeqCst) {
                    break;
                }
                match item {
                    Ok(e) => {
                        if credit_tx.send(()).is_err() || job_tx.send((ordinal, e)).is_err() {
                            break;
                        }
                        ordinal += 1;
                    }
                    Err(err) if cfg.skip_bad && !err.is_fatal() => {
                        log::warn!("skipping input record {record}: {err}");
                        skipped += 1;
                    }
                    Err(err) => {
                        fail(
                            ordinal,
                            PipelineError::Input {
                                record: record as u64,
                                source: err,
                            },
                        );
                        break;
                    }
                }
            }
            drop(job_tx);
            skipped
        });

        let workers: Vec<_> = (0..jobs)
            .map(|_| {
                let job_rx = job_rx.clone();
                let done_tx = done_tx.clone();
                let fail = &fail;
                let abort = &abort;
                s.spawn(move || {
                    let mut ex = Examiner {
                        cfg,
                        counters: PipelineCounters::new(),
                    };
                    for (ordinal, e) in job_rx {
                        let mut record = None;
                        if !abort.load(Ordering::SeqCst) {
                            match ex.examine(ordinal, &e) {
                                Ok(true) => {
                                    let mut bytes = Vec::new();
                                    match encode_record(e.graph(), &mut bytes) {
                                        Ok(()) => record = Some(bytes),
                                        Err(err) => fail(ordinal, err.into()),
                                    }
                                }
                                Ok(false) => {}
                                Err(err) => fail(ordinal, err),
                            }
                        }
                        // every ordinal is reported so the writer can advance
                        if done_tx.send((ordinal, record)).is_err() {
                            break;
                        }
                    }
                    ex.counters
                })
            })
            .collect();
        drop(job_rx);
        drop(done_tx);

        let mut writer = survivors.map(|w| PlanarCodeWriter::new(w, true));
        let mut pending: BTreeMap<u64, Option<Vec<u8>>> = BTreeMap::new();
        let mut next = 0u64;
        for (ordinal, record) in done_rx {
            pending.insert(ordinal, record);
            while let Some(record) = pending.remove(&next) {
                if let (Some(w), Some(bytes)) = (writer.as_mut(), record) {
                    if !abort.load(Ordering::SeqCst) {
                        if let Err(err) = w.write_raw_record(&bytes) {
                            fail(next, err.into());
                        }
                    }
                }
                let _ = credit_rx.recv();
                next += 1;
            }
        }

        let mut counters = PipelineCounters::new();
        for w in workers {
            counters.merge(&w.join().expect("worker panicked"));
        }
        counters.skipped = decoder.join().expect("decoder panicked");
        if let Some(w) = writer {
            if !abort.load(Ordering::SeqCst) {
                if let Err(err) = w.finish() {
                    fail(next, err.into());
                }
            }
        }
        counters
    });

    let mut failures = failures.into_inner().expect("poisoned");
    if let Some(i) = (0..failures.len()).min_by_key(|&i| failures[i].0) {
        return Err(failures.swap_remove(i).1);
    }
    if let Err((n, what)) = counters.check() {
        return Err(PipelineError::Disagreement {
            ordinal: 0,
            n,
            detail: format!("counter invariant violated: {what}"),
            record_hex: String::new(),
        });
    }
    counters.rows.retain(|_, r| r.total > 0);
    Ok(counters)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codec::{read_embeddings, write_planar_code, Format};
    use crate::fixtures;

    fn stream_of(graphs: &[&Graph]) -> Vec<u8> {
        let mut bytes = Vec::new();
        write_planar_code(graphs.iter().copied(), &mut bytes, true).unwrap();
        bytes
    }

    fn run(bytes: Vec<u8>, cfg: &PipelineConfig) -> (Result<PipelineCounters, PipelineError>, Vec<u8>) {
        let mut out = Vec::new();
        let r = process_embeddings(read_embeddings(io::Cursor::new(bytes), cfg.input), cfg, Some(&mut out));
        (r, out)
    }

    #[test]
    fn empty_input_gives_zero_counters() {
        let (r, out) = run(stream_of(&[]), &PipelineConfig::default());
        let c = r.unwrap();
        assert!(c.rows.is_empty());
        assert_eq!(c.totals(), RowCounts::default());
        assert_eq!(out, crate::codec::HEADER);
    }

    #[test]
    fn fixture_stream_buckets() {
        let d = fixtures::dodecahedron();
        let cube = fixtures::cube();
        let k4 = fixtures::k4();
        let bytes = stream_of(&[&d, &cube, &k4, &d]);
        let (r, out) = run(bytes, &PipelineConfig::default());
        let c = r.unwrap();
        let r20 = c.row(20).unwrap();
        assert_eq!((r20.total, r20.c5, r20.n5, r20.c4), (2, 2, 0, 0));
        assert_eq!(c.row(8).unwrap().rejected_girth, 1);
        assert_eq!(c.row(4).unwrap().rejected_girth, 1);
        assert_eq!(out, crate::codec::HEADER, "no non-hamiltonian survivors");
    }

    #[test]
    fn unclassified_mode_and_grinberg() {
        let d = fixtures::dodecahedron();
        let cfg = PipelineConfig {
            classify_connectivity: false,
            grinberg: true,
            verify_rate: 1.0,
            ..Default::default()
        };
        let (r, _) = run(stream_of(&[&d]), &cfg);
        let row = *r.unwrap().row(20).unwrap();
        assert_eq!(
            (row.unclassified, row.c5, row.cross_verified, row.grinberg_certified),
            (1, 0, 1, 0)
        );
    }

    #[test]
    fn injected_fault_is_fatal_with_reproducer() {
        let d = fixtures::dodecahedron();
        let cfg = PipelineConfig {
            inject_fault: Some(1),
            ..Default::default()
        };
        let (r, _) = run(stream_of(&[&d, &d, &d]), &cfg);
        let err = r.unwrap_err();
        assert_eq!(err.exit_code(), 2);
        let PipelineError::Disagreement {
            ordinal, record_hex, ..
        } = &err
        else {
            panic!("{err}");
        };
        assert_eq!(*ordinal, 1);
        assert_eq!(*record_hex, record_hex_of(&d));
    }

    fn record_hex_of(e: &PlanarEmbedding) -> String {
        record_hex(e.graph())
    }

    #[test]
    fn bad_records_abort_or_skip() {
        let d = fixtures::dodecahedron();
        let mut bytes = stream_of(&[&d]);
        // an asymmetric 4-vertex record, then the dodecahedron again
        bytes.extend_from_slice(&[4, 2, 3, 0, 1, 0, 1, 0, 1, 0]);
        let mut tail = Vec::new();
        encode_record(&d, &mut tail).unwrap();
        bytes.extend_from_slice(&tail);

        let (r, _) = run(bytes.clone(), &PipelineConfig::default());
        let err = r.unwrap_err();
        assert_eq!(err.exit_code(), 1);
        assert!(matches!(err, PipelineError::Input { record: 1, .. }));

        let cfg = PipelineConfig {
            skip_bad: true,
            ..Default::default()
        };
        let (r, _) = run(bytes, &cfg);
        let c = r.unwrap();
        assert_eq!(c.skipped, 1);
        assert_eq!(c.row(20).unwrap().total, 2);
    }

    #[test]
    fn unsupported_input_exit_code() {
        let mut bytes = crate::codec::HEADER.to_vec();
        bytes.extend_from_slice(&[0, 4, 0]);
        let (r, _) = run(bytes, &PipelineConfig::default());
        assert_eq!(r.unwrap_err().exit_code(), 3);
    }

    #[test]
    fn config_validation() {
        let cfg = PipelineConfig {
            jobs: 0,
            ..Default::default()
        };
        assert_eq!(cfg.validate().unwrap_err().exit_code(), 1);
        let cfg = PipelineConfig {
            verify_rate: 1.5,
            ..Default::default()
        };
        assert!(cfg.validate().is_err());
        let cfg = PipelineConfig {
            input: InputOptions {
                format: Format::Text,
                ..Default::default()
            },
            ..Default::default()
        };
        assert!(cfg.validate().is_ok());
    }
}
