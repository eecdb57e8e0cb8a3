//! Corpus survey for line graphs that might fail the PMH property.
//!
//! Finished graphs are appended to a journal (one JSON record per line,
//! keyed by graph6 and filter). A rerun over the same corpus reads the
//! journal, skips those graphs and prints the same records and summary.
//! Inconclusive graphs are not journalled, so a rerun with a larger budget
//! retries them.

use std::collections::{BTreeMap, HashMap};
use std::fs::{self, OpenOptions};
use std::io::Write;
use std::path::Path;
use std::sync::Mutex;

use pmh::cycles::is_hamiltonian;
use pmh::engine::is_pmh;
use pmh::graph::parse_graph6;
use pmh::line_graph::build_line_graph;
use pmh::{Budget, Edge, Error, Graph, Meter, Result};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::{io_error, Problem, Status, SCHEMA_VERSION};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct Record {
    graph6: String,
    problem: Problem,
    passes: bool,
    /// Why the graph fails the filter.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    reason: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    is_pmh: Option<bool>,
    #[serde(default)]
    vacuous: bool,
    /// A perfect matching of L(G) in no Hamiltonian cycle.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    witness: Option<Vec<Edge>>,
    #[serde(default)]
    matchings_tested: u64,
    #[serde(default)]
    nodes: u64,
}

enum Outcome {
    Done(Record),
    Inconclusive { nodes: u64 },
    Failed(Error),
}

impl<'de> Deserialize<'de> for Problem {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        <Problem as clap::ValueEnum>::from_str(&s, false).map_err(serde::de::Error::custom)
    }
}

/// Why `g` fails the filter, or `None` if it passes. Hamiltonicity is
/// tested last since it is the only costly check.
fn filter(problem: Problem, g: &Graph, meter: &mut Meter) -> Result<Option<String>> {
    if g.size() % 2 == 1 {
        return Ok(Some("odd size".into()));
    }
    let shape = match problem {
        Problem::P1 => match g.regularity() {
            Some(r) if r >= 4 => None,
            Some(r) => Some(format!("{r}-regular")),
            None => Some("not regular".into()),
        },
        Problem::P2 => {
            if !g.is_connected() || g.vertices().any(|v| g.degree(v) % 2 == 1) {
                Some("not eulerian".into())
            } else {
                None
            }
        }
        Problem::Maxdeg4 => {
            (g.max_degree() != 4).then(|| format!("maximum degree {}", g.max_degree()))
        }
    };
    if shape.is_some() {
        return Ok(shape);
    }
    Ok((!is_hamiltonian(g, meter)?).then(|| "not Hamiltonian".into()))
}

fn examine(problem: Problem, graph6: &str, g: &Graph, budget: Budget) -> Outcome {
    let mut meter = Meter::new(budget);
    let mut record = Record {
        graph6: graph6.to_string(),
        problem,
        passes: false,
        reason: None,
        is_pmh: None,
        vacuous: false,
        witness: None,
        matchings_tested: 0,
        nodes: 0,
    };
    let result = (|| -> Result<()> {
        record.reason = filter(problem, g, &mut meter)?;
        if record.reason.is_some() {
            return Ok(());
        }
        record.passes = true;
        let l = build_line_graph(g)?;
        let v = is_pmh(l.lg(), &mut meter)?;
        record.is_pmh = Some(v.is_pmh);
        record.vacuous = v.vacuous;
        record.witness = v.witness.map(|m| m.edges().to_vec());
        record.matchings_tested = v.stats.matchings_tested;
        Ok(())
    })();
    record.nodes = meter.nodes();
    match result {
        Ok(()) => Outcome::Done(record),
        Err(Error::Inconclusive { nodes }) => Outcome::Inconclusive { nodes },
        Err(e) => Outcome::Failed(e),
    }
}

fn load_journal(
    path: &Path,
    problem: Problem,
    err: &mut dyn Write,
) -> Result<HashMap<String, Record>> {
    let mut done = HashMap::new();
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(done),
        Err(e) => return Err(Error::Parameter(format!("{}: {e}", path.display()))),
    };
    for (i, line) in text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
    {
        match serde_json::from_str::<Record>(line) {
            Ok(r) if r.problem == problem => {
                done.insert(r.graph6.clone(), r);
            }
            Ok(_) => {}
            // A torn final line from an interrupted run is expected.
            Err(e) => {
                writeln!(err, "pmh: journal line {}: ignored: {e}", i + 1).map_err(io_error)?
            }
        }
    }
    Ok(done)
}

pub(crate) fn run(
    lines: &[(usize, String)],
    problem: Problem,
    journal: Option<&Path>,
    threads: Option<usize>,
    budget: Budget,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<Status> {
    let mut warnings = 0usize;
    let mut corpus: Vec<(String, Graph)> = Vec::new();
    let mut seen = BTreeMap::new();
    for (lineno, text) in lines {
        match parse_graph6(text) {
            Ok(g) => {
                if seen.insert(text.clone(), ()).is_none() {
                    corpus.push((text.clone(), g));
                }
            }
            Err(e) => {
                warnings += 1;
                writeln!(err, "pmh: line {lineno}: skipped: {e}").map_err(io_error)?;
            }
        }
    }

    let done = match journal {
        Some(p) => load_journal(p, problem, err)?,
        None => HashMap::new(),
    };
    let todo: Vec<usize> = (0..corpus.len())
        .filter(|&i| !done.contains_key(&corpus[i].0))
        .collect();
    writeln!(
        err,
        "pmh: survey: {} graphs, {} from the journal",
        corpus.len(),
        corpus.len() - todo.len()
    )
    .map_err(io_error)?;

    let sink = match journal {
        Some(p) => Some(Mutex::new(
            OpenOptions::new()
                .create(true)
                .append(true)
                .open(p)
                .map_err(|e| Error::Parameter(format!("{}: {e}", p.display())))?,
        )),
        None => None,
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads.unwrap_or(0))
        .build()
        .map_err(|e| Error::Parameter(format!("thread pool: {e}")))?;
    let fresh: Vec<(usize, Outcome)> = pool.install(|| {
        todo.par_iter()
            .map(|&i| {
                let outcome = examine(problem, &corpus[i].0, &corpus[i].1, budget);
                if let (Outcome::Done(r), Some(sink)) = (&outcome, &sink) {
                    let mut f = sink.lock().expect("journal lock");
                    // A failed append only costs a recomputation on rerun.
                    let _ = writeln!(
                        f,
                        "{}",
                        serde_json::to_string(r).expect("records serialise")
                    );
                    let _ = f.flush();
                }
                (i, outcome)
            })
            .collect()
    });
    let mut fresh: HashMap<usize, Outcome> = fresh.into_iter().collect();

    let mut status = Status::Ok;
    let (mut passed, mut pmh, mut not_pmh, mut vacuous, mut inconclusive) = (0, 0, 0, 0, 0);
    let mut counterexamples = Vec::new();
    for (i, (graph6, _)) in corpus.iter().enumerate() {
        let record = match done.get(graph6) {
            Some(r) => r.clone(),
            None => match fresh.remove(&i).expect("every graph was examined") {
                Outcome::Done(r) => r,
                Outcome::Inconclusive { nodes } => {
                    inconclusive += 1;
                    status = status.max(Status::Inconclusive);
                    let line = json!({
                        "schema_version": SCHEMA_VERSION,
                        "command": "survey",
                        "input": graph6,
                        "inconclusive": true,
                        "nodes": nodes,
                    });
                    writeln!(out, "{line}").map_err(io_error)?;
                    continue;
                }
                Outcome::Failed(e) => {
                    warnings += 1;
                    writeln!(err, "pmh: {graph6}: {e}").map_err(io_error)?;
                    continue;
                }
            },
        };
        if !record.passes {
            continue;
        }
        passed += 1;
        match record.is_pmh {
            Some(true) if record.vacuous => vacuous += 1,
            Some(true) => pmh += 1,
            _ => {
                not_pmh += 1;
                counterexamples.push(graph6.clone());
            }
        }
        let mut line = serde_json::to_value(&record).expect("records serialise");
        line["schema_version"] = json!(SCHEMA_VERSION);
        line["command"] = json!("survey");
        line["input"] = json!(graph6);
        writeln!(out, "{line}").map_err(io_error)?;
    }
    let summary = json!({
        "schema_version": SCHEMA_VERSION,
        "command": "survey",
        "summary": {
            "problem": problem,
            "graphs": corpus.len(),
            "passed_filter": passed,
            "pmh": pmh,
            "vacuous": vacuous,
            "not_pmh": not_pmh,
            "inconclusive": inconclusive,
            "warnings": warnings,
            "counterexample_candidates": counterexamples,
        },
    });
    writeln!(out, "{summary}").map_err(io_error)?;
    Ok(status)
}
