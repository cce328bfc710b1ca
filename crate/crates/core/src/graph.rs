//! Simple graphs with contiguous node ids.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};

/// A finite simple graph whose nodes are `0..node_count`.
///
/// Adjacency is kept in ordered sets so that neighbour scans always run in
/// ascending id order. Directed graphs also keep in-neighbour sets.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    directed: bool,
    out_adj: Vec<BTreeSet<usize>>,
    in_adj: Vec<BTreeSet<usize>>,
    edge_count: usize,
}

impl Graph {
    pub fn new(directed: bool) -> Self {
        Self {
            directed,
            out_adj: Vec::new(),
            in_adj: Vec::new(),
            edge_count: 0,
        }
    }

    pub fn undirected() -> Self {
        Self::new(false)
    }

    pub fn directed() -> Self {
        Self::new(true)
    }

    /// Graph with `n` isolated nodes.
    pub fn with_nodes(n: usize, directed: bool) -> Self {
        let mut g = Self::new(directed);
        for _ in 0..n {
            g.add_node();
        }
        g
    }

    /// Builds a graph from an edge list; self-loops and duplicates are dropped.
    pub fn from_edges(n: usize, directed: bool, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::with_nodes(n, directed);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    pub fn node_count(&self) -> usize {
        self.out_adj.len()
    }

    /// Number of edges; each undirected edge counts once.
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn is_empty(&self) -> bool {
        self.out_adj.is_empty()
    }

    /// Appends a node and returns its id.
    pub fn add_node(&mut self) -> usize {
        let id = self.out_adj.len();
        self.out_adj.push(BTreeSet::new());
        if self.directed {
            self.in_adj.push(BTreeSet::new());
        }
        id
    }

    /// Inserts `u -> v` (both directions when undirected).
    ///
    /// Returns whether the edge set changed. Self-loops and duplicates are
    /// silent no-ops so that any instruction sequence stays valid.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        self.check(u)?;
        self.check(v)?;
        if u == v || !self.out_adj[u].insert(v) {
            return Ok(false);
        }
        if self.directed {
            self.in_adj[v].insert(u);
        } else {
            self.out_adj[v].insert(u);
        }
        self.edge_count += 1;
        Ok(true)
    }

    /// Removes `u -> v` (both directions when undirected).
    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        self.check(u)?;
        self.check(v)?;
        if !self.out_adj[u].remove(&v) {
            return Ok(false);
        }
        if self.directed {
            self.in_adj[v].remove(&u);
        } else {
            self.out_adj[v].remove(&u);
        }
        self.edge_count -= 1;
        Ok(true)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.out_adj.get(u).is_some_and(|s| s.contains(&v))
    }

    /// Out-neighbours (all neighbours when undirected), ascending.
    pub fn neighbors(&self, u: usize) -> Result<impl Iterator<Item = usize> + '_> {
        self.check(u)?;
        Ok(self.out_adj[u].iter().copied())
    }

    pub fn neighbors_sorted(&self, u: usize) -> Result<Vec<usize>> {
        Ok(self.neighbors(u)?.collect())
    }

    /// In-neighbours (all neighbours when undirected), ascending.
    pub fn in_neighbors(&self, u: usize) -> Result<impl Iterator<Item = usize> + '_> {
        self.check(u)?;
        let set = if self.directed {
            &self.in_adj[u]
        } else {
            &self.out_adj[u]
        };
        Ok(set.iter().copied())
    }

    pub fn out_degree(&self, u: usize) -> usize {
        self.out_adj.get(u).map_or(0, BTreeSet::len)
    }

    pub fn in_degree(&self, u: usize) -> usize {
        if self.directed {
            self.in_adj.get(u).map_or(0, BTreeSet::len)
        } else {
            self.out_degree(u)
        }
    }

    /// Edges in ascending order; undirected edges are reported once as `(min, max)`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for (u, nbrs) in self.out_adj.iter().enumerate() {
            for &v in nbrs {
                if self.directed || u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// True iff every node is reachable from `v0` along out-edges.
    pub fn all_reachable_from(&self, v0: usize) -> bool {
        v0 < self.node_count() && self.first_unreachable_from(v0).is_none()
    }

    /// Smallest node id not reachable from `v0`, if any.
    pub fn first_unreachable_from(&self, v0: usize) -> Option<usize> {
        let seen = self.reachable_set(v0);
        seen.iter().position(|&s| !s)
    }

    fn reachable_set(&self, v0: usize) -> Vec<bool> {
        let mut seen = vec![false; self.node_count()];
        if v0 >= seen.len() {
            return seen;
        }
        let mut queue = VecDeque::from([v0]);
        seen[v0] = true;
        while let Some(u) = queue.pop_front() {
            for &v in &self.out_adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        seen
    }

    /// Weak connectivity for directed graphs, plain connectivity otherwise.
    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        if self.is_empty() {
            return true;
        }
        if !self.directed {
            return self.all_reachable_from(0);
        }
        self.to_undirected().all_reachable_from(0)
    }

    /// Nodes grouped into connected components (weak for directed graphs),
    /// each sorted ascending, components ordered by their smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let base = if self.directed {
            self.to_undirected()
        } else {
            self.clone()
        };
        let mut label = vec![usize::MAX; base.node_count()];
        let mut comps = Vec::new();
        for s in 0..base.node_count() {
            if label[s] != usize::MAX {
                continue;
            }
            let id = comps.len();
            let mut members = Vec::new();
            let mut stack = vec![s];
            label[s] = id;
            while let Some(u) = stack.pop() {
                members.push(u);
                for &v in &base.out_adj[u] {
                    if label[v] == usize::MAX {
                        label[v] = id;
                        stack.push(v);
                    }
                }
            }
            members.sort_unstable();
            comps.push(members);
        }
        comps
    }

    /// Subgraph induced by `nodes`, relabelled in the given order.
    pub fn induced_subgraph(&self, nodes: &[usize]) -> Result<Graph> {
        let mut index = vec![usize::MAX; self.node_count()];
        for (i, &u) in nodes.iter().enumerate() {
            self.check(u)?;
            index[u] = i;
        }
        let mut g = Graph::with_nodes(nodes.len(), self.directed);
        for (u, v) in self.edges() {
            if index[u] != usize::MAX && index[v] != usize::MAX {
                g.add_edge(index[u], index[v])?;
            }
        }
        Ok(g)
    }

    /// Applies a node relabelling: node `u` becomes `perm[u]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.node_count() {
            return Err(Error::InvalidArgument(format!(
                "permutation of length {} for graph with {} nodes",
                perm.len(),
                self.node_count()
            )));
        }
        let mut seen = vec![false; perm.len()];
        for &p in perm {
            if p >= perm.len() || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidArgument("not a permutation".into()));
            }
        }
        let mut g = Graph::with_nodes(self.node_count(), self.directed);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v])?;
        }
        Ok(g)
    }

    fn to_undirected(&self) -> Graph {
        let mut g = Graph::with_nodes(self.node_count(), false);
        for (u, v) in self.edges() {
            g.add_edge(u, v).expect("ids in range");
        }
        g
    }

    /// Degree sequence sorted ascending (out-degree for directed graphs).
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.node_count()).map(|u| self.out_degree(u)).collect();
        d.sort_unstable();
        d
    }

    fn check(&self, u: usize) -> Result<()> {
        if u < self.node_count() {
            Ok(())
        } else {
            Err(Error::NodeOutOfRange {
                node: u,
                node_count: self.node_count(),
            })
        }
    }

    /// Checks the structural invariants; used by tests and debug assertions.
    pub fn validate(&self) -> std::result::Result<(), String> {
        let n = self.node_count();
        let mut count = 0;
        for (u, nbrs) in self.out_adj.iter().enumerate() {
            for &v in nbrs {
                if v >= n {
                    return Err(format!("edge {u}->{v} leaves the node range"));
                }
                if v == u {
                    return Err(format!("self-loop at {u}"));
                }
                if self.directed {
                    if !self.in_adj[v].contains(&u) {
                        return Err(format!("in-set of {v} misses {u}"));
                    }
                    count += 1;
                } else {
                    if !self.out_adj[v].contains(&u) {
                        return Err(format!("asymmetric edge {u}-{v}"));
                    }
                    if u < v {
                        count += 1;
                    }
                }
            }
        }
        if self.directed {
            let in_total: usize = self.in_adj.iter().map(BTreeSet::len).sum();
            if in_total != count || self.in_adj.len() != n {
                return Err("in-adjacency out of sync".into());
            }
        }
        if count != self.edge_count {
            return Err(format!(
                "edge_count {} but {} edges stored",
                self.edge_count, count
            ));
        }
        Ok(())
    }
}
