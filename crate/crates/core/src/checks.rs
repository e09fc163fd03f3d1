//! Self-check suites run by `schur check`.

use std::fmt;

use serde::Serialize;

use crate::amplitude::AmplitudeEngine;
use crate::error::TransformError;
use crate::exec::Config;
use crate::graph::SwyGraph;
use crate::radical::Radical;
use crate::transform::{dimension_sum, hilbert_dimension, schur_matrix, verify_unitary};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "detail", rename_all = "lowercase")]
pub enum Status {
    Pass(String),
    Fail(String),
    Skipped(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: &'static str,
    #[serde(flatten)]
    pub status: Status,
}

impl SuiteReport {
    pub fn failed(&self) -> bool {
        matches!(self.status, Status::Fail(_))
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (tag, detail) = match &self.status {
            Status::Pass(d) => ("PASS", d),
            Status::Fail(d) => ("FAIL", d),
            Status::Skipped(d) => ("SKIP", d),
        };
        write!(f, "{:<22} {tag}  {detail}", self.suite)
    }
}

fn verdict(ok: bool, detail: String) -> Status {
    if ok {
        Status::Pass(detail)
    } else {
        Status::Fail(detail)
    }
}

/// Every edge of the qubit graph gets the same amplitude from both engines.
pub fn pattern_equivalence(graph: &SwyGraph, config: &Config) -> SuiteReport {
    let status = if graph.d() != 2 {
        Status::Skipped("pattern rules exist only for d = 2".into())
    } else {
        match graph.count_engine_disagreements(config.execution) {
            Ok(bad) => verdict(bad == 0, format!("{} edges, {bad} disagreements", graph.edges().len())),
            Err(e) => Status::Fail(e.to_string()),
        }
    };
    SuiteReport { suite: "pattern-equivalence", status }
}

/// For each vertex and letter, the outgoing squared amplitudes sum to 1.
pub fn column_normalization(graph: &SwyGraph, config: &Config) -> SuiteReport {
    let below_top: Vec<usize> = graph.vertices().iter().filter(|v| v.level < graph.n_max()).map(|v| v.id).collect();
    let bad: usize = config
        .execution
        .map(&below_top, |&v| {
            (1..=graph.d() as u8)
                .filter(|&k| {
                    let edges = graph.up_edges(v, Some(k)).unwrap_or_default();
                    !edges.iter().map(|e| e.amplitude.square()).sum::<Radical>().is_one()
                })
                .count()
        })
        .into_iter()
        .sum();
    let fans = below_top.len() * graph.d();
    SuiteReport {
        suite: "column-normalization",
        status: verdict(bad == 0, format!("{fans} fans, {bad} not normalized")),
    }
}

pub fn dimension(d: usize, n: usize) -> SuiteReport {
    let status = match (dimension_sum(d, n), hilbert_dimension(d, n)) {
        (Ok(sum), Some(size)) => verdict(sum == size, format!("sum over shapes {sum}, d^n {size}")),
        (Err(e), _) => Status::Fail(e.to_string()),
        (_, None) => Status::Fail("d^n overflows".into()),
    };
    SuiteReport { suite: "dimension", status }
}

pub fn unitarity(d: usize, n: usize, config: &Config) -> SuiteReport {
    let status = match schur_matrix(d, n, config) {
        Ok((_, m)) => {
            verdict(verify_unitary(&m, config.execution), format!("{0}x{0}, {1} nonzero entries", m.rows(), m.nnz()))
        }
        Err(TransformError::SizeBound { size, bound }) => {
            Status::Skipped(format!("d^n = {size} above size bound {bound}"))
        }
        Err(e) => Status::Fail(e.to_string()),
    };
    SuiteReport { suite: "unitarity", status }
}

/// Runs every suite for `(d, n)`.
pub fn run_all(d: usize, n: usize, config: &Config) -> Result<Vec<SuiteReport>, TransformError> {
    let graph_config = Config { engine: AmplitudeEngine::Louck, ..*config };
    let graph = SwyGraph::build_with(d, n, &graph_config)?;
    Ok(vec![
        pattern_equivalence(&graph, config),
        column_normalization(&graph, config),
        dimension(d, n),
        unitarity(d, n, config),
    ])
}
