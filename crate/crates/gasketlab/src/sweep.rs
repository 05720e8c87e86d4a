//! Exact `χ`/`ω` sweeps of gaskets over graph6 corpora.

use std::io::{self, Write};
use std::time::{Duration, Instant};

use gasket_core::analysis::{profile_of, Verdict};
use gasket_core::build::verify_counts;
use gasket_core::{build_gasket, BaseGraph, Error};
use rayon::prelude::*;
use serde::Serialize;

pub const CSV_HEADER: &str =
    "graph6,n,edges,chi_base,t,order,size,chi_gasket,omega_base,omega_gasket,counterexample,elapsed_ms,status";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Ok,
    Finding,
    Bug,
    SkippedCap,
    SkippedTimeout,
}

/// One `(G,t)` instance. Gasket fields are empty for skipped instances.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepRecord {
    pub graph6: String,
    pub n: usize,
    pub edges: usize,
    pub chi_base: usize,
    pub t: usize,
    pub order: Option<usize>,
    pub size: Option<usize>,
    pub chi_gasket: Option<usize>,
    pub omega_base: usize,
    pub omega_gasket: Option<usize>,
    pub counterexample: Option<bool>,
    pub elapsed_ms: u64,
    pub status: Status,
}

#[derive(Clone, Debug)]
pub struct SweepOptions {
    pub depths: Vec<usize>,
    pub vertex_cap: u64,
    pub time_budget: Duration,
    pub jobs: usize,
}

pub fn run_instance(graph6: &str, g: &BaseGraph, t: usize, cap: u64, budget: Duration) -> SweepRecord {
    let start = Instant::now();
    let mut record = SweepRecord {
        graph6: graph6.to_string(),
        n: g.order(),
        edges: g.edge_count(),
        chi_base: g.chromatic_number(),
        t,
        order: None,
        size: None,
        chi_gasket: None,
        omega_base: g.clique_number(),
        omega_gasket: None,
        counterexample: None,
        elapsed_ms: 0,
        status: Status::SkippedCap,
    };
    let m = match build_gasket(g, t, cap) {
        Ok(m) => m,
        Err(Error::CapExceeded { .. }) => return finish(record, start),
        Err(e) => panic!("gasket of a parsed graph failed to build: {e}"),
    };
    record.order = Some(m.order());
    record.size = Some(m.size());
    let counts_ok = verify_counts(&m).passed();
    let mut abort = || start.elapsed() > budget;
    record.status = match profile_of(g, &m, &mut abort) {
        Ok(p) => {
            record.chi_gasket = Some(p.chi_gasket);
            record.omega_gasket = Some(p.omega_gasket);
            record.counterexample = Some(p.chi_gasket != p.chi_base);
            match p.verdict() {
                _ if !counts_ok => Status::Bug,
                Verdict::Consistent => Status::Ok,
                Verdict::Finding => Status::Finding,
                Verdict::Bug => Status::Bug,
            }
        }
        Err(Error::Aborted) => Status::SkippedTimeout,
        Err(e) => panic!("profile failed: {e}"),
    };
    finish(record, start)
}

fn finish(mut record: SweepRecord, start: Instant) -> SweepRecord {
    record.elapsed_ms = start.elapsed().as_millis() as u64;
    record
}

/// Runs every graph at every depth. Output order is input order, then
/// ascending `t`, regardless of `jobs`.
pub fn sweep(graphs: &[(String, BaseGraph)], opts: &SweepOptions) -> Vec<SweepRecord> {
    let mut depths = opts.depths.clone();
    depths.sort_unstable();
    depths.dedup();
    let tasks: Vec<(&str, &BaseGraph, usize)> = graphs
        .iter()
        .flat_map(|(s, g)| depths.iter().map(move |&t| (s.as_str(), g, t)))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs)
        .build()
        .expect("thread pool");
    pool.install(|| {
        tasks
            .par_iter()
            .map(|&(s, g, t)| run_instance(s, g, t, opts.vertex_cap, opts.time_budget))
            .collect()
    })
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Tally {
    pub ok: usize,
    pub findings: usize,
    pub bugs: usize,
    pub skipped: usize,
}

impl Tally {
    pub fn of(records: &[SweepRecord]) -> Self {
        let mut t = Tally::default();
        for r in records {
            match r.status {
                Status::Ok => t.ok += 1,
                Status::Finding => t.findings += 1,
                Status::Bug => t.bugs += 1,
                Status::SkippedCap | Status::SkippedTimeout => t.skipped += 1,
            }
        }
        t
    }
}

pub fn write_csv<W: Write>(records: &[SweepRecord], out: W) -> io::Result<()> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(out);
    w.write_record(CSV_HEADER.split(','))?;
    for r in records {
        w.serialize(r)?;
    }
    w.flush()
}

pub fn write_jsonl<W: Write>(records: &[SweepRecord], mut out: W) -> io::Result<()> {
    for r in records {
        serde_json::to_writer(&mut out, r)?;
        out.write_all(b"\n")?;
    }
    out.flush()
}
