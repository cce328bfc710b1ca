//! Agreement between string distance and exact graph edit distance over a
//! corpus.

use std::collections::BTreeMap;
use std::time::Instant;

use graphstring_core::{derive_seed, ged_exact, levenshtein, ols_slope, spearman, DEFAULT_GED_CAP};
use rayon::prelude::*;

use crate::config::ExperimentConfig;
use crate::error::{BenchError, Result};
use crate::method::Method;

#[derive(Debug, Clone, PartialEq)]
pub enum Correlation {
    /// No pair survived the filter.
    Empty,
    /// Too few pairs or a constant coordinate.
    Undefined {
        reason: String,
    },
    Defined {
        rho: f64,
        p_value: f64,
        beta: f64,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct DistanceReport {
    pub method: Method,
    pub pair_count: usize,
    pub correlation: Correlation,
    /// `(ged, lev)` for every retained pair.
    pub points: Vec<(usize, usize)>,
}

impl DistanceReport {
    pub fn from_points(method: Method, points: Vec<(usize, usize)>) -> Self {
        let correlation = if points.is_empty() {
            Correlation::Empty
        } else {
            let xy: Vec<(f64, f64)> = points.iter().map(|&(g, l)| (g as f64, l as f64)).collect();
            match (spearman(&xy), ols_slope(&xy)) {
                (Ok(s), Ok(beta)) => Correlation::Defined {
                    rho: s.rho,
                    p_value: s.p_value,
                    beta,
                },
                (Err(e), _) | (_, Err(e)) => Correlation::Undefined {
                    reason: e.to_string(),
                },
            }
        };
        Self {
            method,
            pair_count: points.len(),
            correlation,
            points,
        }
    }

    pub fn rho(&self) -> Option<f64> {
        match self.correlation {
            Correlation::Defined { rho, .. } => Some(rho),
            _ => None,
        }
    }

    /// Pair counts per integer `(ged, lev)` cell.
    pub fn histogram(&self) -> BTreeMap<(usize, usize), usize> {
        let mut h = BTreeMap::new();
        for &p in &self.points {
            *h.entry(p).or_insert(0) += 1;
        }
        h
    }
}

/// One corpus pair `i < j`, unfiltered. `lev` follows the run's method order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairRow {
    pub graph_i: String,
    pub graph_j: String,
    pub ged: usize,
    pub lev: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct CorrelationRun {
    pub methods: Vec<Method>,
    /// `encodings[k][i]`: string of graph `i` under method `k`.
    pub encodings: Vec<Vec<String>>,
    pub rows: Vec<PairRow>,
    pub reports: Vec<DistanceReport>,
}

/// Encodes the corpus with each method, computes all pairwise Levenshtein
/// and exact edit distances, and keeps pairs with `i < j`, `GED > 0` and
/// `Lev > 0` for the statistics.
pub fn run_correlation(cfg: &ExperimentConfig) -> Result<CorrelationRun> {
    cfg.validate()?;
    let too_big: Vec<String> = cfg
        .corpus
        .iter()
        .filter(|g| g.graph.node_count() > DEFAULT_GED_CAP)
        .map(|g| format!("{} ({} nodes)", g.name, g.graph.node_count()))
        .collect();
    if !too_big.is_empty() {
        return Err(BenchError::OracleCap {
            cap: DEFAULT_GED_CAP,
            graphs: too_big,
        });
    }

    let mut encodings = Vec::with_capacity(cfg.methods.len());
    for &m in &cfg.methods {
        let strings = cfg
            .corpus
            .iter()
            .enumerate()
            .map(|(i, g)| {
                m.encode(
                    &g.graph,
                    derive_seed(cfg.seed, i as u64),
                    Some(Instant::now() + cfg.timeout),
                )
            })
            .collect::<graphstring_core::Result<Vec<String>>>()?;
        encodings.push(strings);
    }

    let n = cfg.corpus.len();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .map_err(|e| BenchError::Config(e.to_string()))?;
    let geds: Vec<usize> = pool.install(|| {
        pairs
            .par_iter()
            .map(|&(i, j)| ged_exact(&cfg.corpus[i].graph, &cfg.corpus[j].graph, DEFAULT_GED_CAP))
            .collect::<graphstring_core::Result<Vec<usize>>>()
    })?;

    let rows: Vec<PairRow> = pairs
        .iter()
        .zip(&geds)
        .map(|(&(i, j), &ged)| PairRow {
            graph_i: cfg.corpus[i].name.clone(),
            graph_j: cfg.corpus[j].name.clone(),
            ged,
            lev: encodings
                .iter()
                .map(|e| levenshtein(&e[i], &e[j]))
                .collect(),
        })
        .collect();

    let reports = cfg
        .methods
        .iter()
        .enumerate()
        .map(|(k, &m)| {
            let points = rows
                .iter()
                .filter(|r| r.ged > 0 && r.lev[k] > 0)
                .map(|r| (r.ged, r.lev[k]))
                .collect();
            DistanceReport::from_points(m, points)
        })
        .collect();

    Ok(CorrelationRun {
        methods: cfg.methods.clone(),
        encodings,
        rows,
        reports,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::NamedGraph;
    use graphstring_core::Graph;

    fn path(n: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, false, &edges).unwrap()
    }

    #[test]
    fn identical_graphs_give_an_empty_report() {
        let cfg = ExperimentConfig {
            corpus: (0..4)
                .map(|i| NamedGraph::new(format!("p{i}"), path(4)))
                .collect(),
            ..ExperimentConfig::default()
        };
        let run = run_correlation(&cfg).unwrap();
        assert_eq!(run.rows.len(), 6);
        for r in &run.reports {
            assert_eq!((r.pair_count, &r.correlation), (0, &Correlation::Empty));
        }
    }

    #[test]
    fn a_single_pair_is_undefined() {
        let cfg = ExperimentConfig {
            corpus: vec![
                NamedGraph::new("k2", path(2)),
                NamedGraph::new("p3", path(3)),
            ],
            ..ExperimentConfig::default()
        };
        let run = run_correlation(&cfg).unwrap();
        assert_eq!(run.rows[0].ged, 2);
        for r in &run.reports {
            assert_eq!(r.pair_count, 1);
            assert!(
                matches!(r.correlation, Correlation::Undefined { .. }),
                "{r:?}"
            );
        }
    }

    #[test]
    fn oversized_graphs_are_listed() {
        let cfg = ExperimentConfig {
            corpus: vec![
                NamedGraph::new("big", path(9)),
                NamedGraph::new("ok", path(3)),
            ],
            ..ExperimentConfig::default()
        };
        match run_correlation(&cfg) {
            Err(BenchError::OracleCap { cap: 8, graphs }) => {
                assert_eq!(graphs, vec!["big (9 nodes)"])
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn histogram_counts_cells() {
        let r = DistanceReport::from_points(Method::Canonical, vec![(1, 2), (1, 2), (2, 3)]);
        assert_eq!(
            r.histogram().into_iter().collect::<Vec<_>>(),
            vec![((1, 2), 2), ((2, 3), 1)]
        );
    }
}
