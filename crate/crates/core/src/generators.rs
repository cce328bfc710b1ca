//! Seeded graph families and one-edit neighbourhoods.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::instruction::Instruction;
use crate::rng::Prng;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Path,
    Cycle,
    Complete,
    Star,
    Wheel,
    RandomTree,
    Petersen,
    House,
    BarabasiAlbert,
    ErdosRenyi,
}

impl Family {
    pub const ALL: [Family; 10] = [
        Family::Path,
        Family::Cycle,
        Family::Complete,
        Family::Star,
        Family::Wheel,
        Family::RandomTree,
        Family::Petersen,
        Family::House,
        Family::BarabasiAlbert,
        Family::ErdosRenyi,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Complete => "complete",
            Family::Star => "star",
            Family::Wheel => "wheel",
            Family::RandomTree => "random_tree",
            Family::Petersen => "petersen",
            Family::House => "house",
            Family::BarabasiAlbert => "barabasi_albert",
            Family::ErdosRenyi => "erdos_renyi",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let alias = match s {
            "ba" => Some(Family::BarabasiAlbert),
            "er" => Some(Family::ErdosRenyi),
            "tree" => Some(Family::RandomTree),
            _ => None,
        };
        alias
            .or_else(|| Family::ALL.into_iter().find(|f| f.name() == s))
            .ok_or_else(|| Error::InvalidArgument(format!("unknown graph family '{s}'")))
    }
}

/// Parameters for [`generate`]. `param` is `m` for Barabási-Albert and `p`
/// for Erdős-Rényi; other families ignore it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GraphSpec {
    pub family: Family,
    pub n: usize,
    pub param: f64,
    pub seed: u64,
}

impl GraphSpec {
    pub fn new(family: Family, n: usize) -> Self {
        Self {
            family,
            n,
            param: 0.0,
            seed: 42,
        }
    }

    pub fn with_param(mut self, param: f64) -> Self {
        self.param = param;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }
}

/// Builds a connected simple undirected graph.
///
/// Petersen and house have fixed sizes and ignore `n`. A cycle on one node
/// is a single node and on two nodes a single edge. Erdős-Rényi samples keep
/// only their largest component (the one with the smallest node on ties), so
/// they may have fewer than `n` nodes.
pub fn generate(spec: &GraphSpec) -> Result<Graph> {
    let n = spec.n;
    let fixed_size = matches!(spec.family, Family::Petersen | Family::House);
    if n == 0 && !fixed_size {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    let mut rng = Prng::new(spec.seed);
    let g = match spec.family {
        Family::Path => edges_on(n, (1..n).map(|i| (i - 1, i))),
        Family::Cycle => edges_on(n, (0..n).map(|i| (i, (i + 1) % n))),
        Family::Complete => edges_on(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))),
        Family::Star => edges_on(n, (1..n).map(|i| (0, i))),
        Family::Wheel => {
            if n < 4 {
                return Err(Error::InvalidArgument(
                    "a wheel needs at least 4 nodes".into(),
                ));
            }
            let rim = (1..n).map(|i| (i, if i + 1 == n { 1 } else { i + 1 }));
            edges_on(n, (1..n).map(|i| (0, i)).chain(rim))
        }
        Family::RandomTree => {
            let parents: Vec<(usize, usize)> = (1..n).map(|i| (rng.index(i), i)).collect();
            edges_on(n, parents)
        }
        Family::Petersen => {
            let outer = (0..5).map(|i| (i, (i + 1) % 5));
            let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
            let spokes = (0..5).map(|i| (i, i + 5));
            edges_on(10, outer.chain(inner).chain(spokes))
        }
        Family::House => edges_on(5, [(0, 1), (0, 2), (1, 3), (2, 3), (2, 4), (3, 4)]),
        Family::BarabasiAlbert => barabasi_albert(n, spec.param, &mut rng)?,
        Family::ErdosRenyi => erdos_renyi(n, spec.param, &mut rng)?,
    };
    Ok(g)
}

fn edges_on(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Graph {
    let mut g = Graph::with_nodes(n, false);
    for (u, v) in edges {
        g.add_edge(u, v).expect("generated ids are in range");
    }
    g
}

/// Seed clique on `m` nodes, then each new node attaches to `m` distinct
/// existing nodes drawn proportionally to degree (duplicates re-drawn,
/// uniform while every degree is zero).
fn barabasi_albert(n: usize, param: f64, rng: &mut Prng) -> Result<Graph> {
    if param.fract() != 0.0 || param < 1.0 || param >= n as f64 {
        return Err(Error::InvalidArgument(format!(
            "barabasi_albert needs an integer m with 1 <= m < n, got m = {param}, n = {n}"
        )));
    }
    let m = param as usize;
    let mut g = edges_on(m, (0..m).flat_map(|u| (u + 1..m).map(move |v| (u, v))));
    // One entry per edge endpoint, so a uniform draw is degree-proportional.
    let mut endpoints: Vec<usize> = g.edges().into_iter().flat_map(|(u, v)| [u, v]).collect();
    for new in m..n {
        let mut targets = BTreeSet::new();
        while targets.len() < m {
            let t = if endpoints.is_empty() {
                rng.index(new)
            } else {
                endpoints[rng.index(endpoints.len())]
            };
            targets.insert(t);
        }
        let id = g.add_node();
        for t in targets {
            g.add_edge(t, id)?;
            endpoints.extend([t, id]);
        }
    }
    Ok(g)
}

/// G(n, p) over pairs `(u, v)`, `u < v`, in lexicographic order, reduced to
/// its largest connected component.
fn erdos_renyi(n: usize, p: f64, rng: &mut Prng) -> Result<Graph> {
    if !(p > 0.0 && p <= 1.0) {
        return Err(Error::InvalidArgument(format!(
            "erdos_renyi needs 0 < p <= 1, got {p}"
        )));
    }
    let mut g = Graph::with_nodes(n, false);
    for u in 0..n {
        for v in u + 1..n {
            if rng.unit_f64() < p {
                g.add_edge(u, v)?;
            }
        }
    }
    let components = g.components();
    let largest = components
        .iter()
        .enumerate()
        .max_by_key(|(i, c)| (c.len(), std::cmp::Reverse(*i)))
        .map(|(_, c)| c.clone())
        .expect("n >= 1");
    g.induced_subgraph(&largest)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EditKind {
    Delete,
    Insert,
}

impl EditKind {
    pub fn name(self) -> &'static str {
        match self {
            EditKind::Delete => "delete",
            EditKind::Insert => "insert",
        }
    }
}

#[derive(Debug, Clone)]
pub struct EditNeighbor {
    pub kind: EditKind,
    pub u: usize,
    pub v: usize,
    pub graph: Graph,
}

/// Every connected graph one edge edit away from `g`: deletions of
/// non-bridge edges and insertions of absent edges, ordered by `(u, v)`.
pub fn edit_neighbors_1ged(g: &Graph) -> Vec<EditNeighbor> {
    let n = g.node_count();
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let mut h = g.clone();
            let kind = if g.has_edge(u, v) {
                h.remove_edge(u, v).expect("in range");
                if !h.is_connected() {
                    continue;
                }
                EditKind::Delete
            } else {
                h.add_edge(u, v).expect("in range");
                EditKind::Insert
            };
            out.push(EditNeighbor {
                kind,
                u,
                v,
                graph: h,
            });
        }
    }
    out
}

/// Every distinct string one Levenshtein edit away from `w`, sorted.
pub fn string_neighbors_1lev(w: &str) -> Vec<String> {
    let chars: Vec<char> = w.chars().collect();
    let alphabet = Instruction::ALL.map(Instruction::as_char);
    let mut out = BTreeSet::new();
    for i in 0..chars.len() {
        let mut del = chars.clone();
        del.remove(i);
        out.insert(del.into_iter().collect::<String>());
        for &c in &alphabet {
            let mut sub = chars.clone();
            sub[i] = c;
            out.insert(sub.into_iter().collect());
        }
    }
    for i in 0..=chars.len() {
        for &c in &alphabet {
            let mut ins = chars.clone();
            ins.insert(i, c);
            out.insert(ins.into_iter().collect());
        }
    }
    out.remove(w);
    out.into_iter().collect()
}
