//! Exact ground-truth checks for small graphs: unit-cost graph edit distance
//! and graph isomorphism. Both are exponential and guarded by size caps.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_GED_CAP: usize = 8;
pub const DEFAULT_ISO_CAP: usize = 10;

/// Fixed cost scheme: node and edge insertions/deletions cost 1, node
/// substitution is free (nodes are unlabelled).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GedCosts {
    pub node_ins: usize,
    pub node_del: usize,
    pub node_sub: usize,
    pub edge_ins: usize,
    pub edge_del: usize,
}

pub const GED_COSTS: GedCosts = GedCosts {
    node_ins: 1,
    node_del: 1,
    node_sub: 0,
    edge_ins: 1,
    edge_del: 1,
};

/// Exact graph edit distance between undirected graphs.
///
/// With free substitution, extending a partial node mapping never costs
/// more (it saves one deletion and one insertion and can only preserve more
/// edges), so the search ranges over injections of the smaller node set into
/// the larger one. The cost of a mapping is
/// `|n_g - n_h| + |E_g| + |E_h| - 2 * preserved`, where `preserved` counts
/// edges of the smaller graph whose image is an edge.
pub fn ged_exact(g: &Graph, h: &Graph, size_cap: usize) -> Result<usize> {
    for x in [g, h] {
        if x.node_count() > size_cap {
            return Err(Error::SizeCapExceeded {
                size: x.node_count(),
                cap: size_cap,
            });
        }
        if x.is_directed() {
            return Err(Error::InvalidArgument(
                "edit distance is defined for undirected graphs".into(),
            ));
        }
    }
    let (small, large) = if g.node_count() <= h.node_count() {
        (g, h)
    } else {
        (h, g)
    };
    let node_part = (large.node_count() - small.node_count()) * (GED_COSTS.node_ins);
    let edge_total = small.edge_count() + large.edge_count();
    let preserved = max_preserved(small, large);
    Ok(node_part + edge_total - 2 * preserved)
}

/// Largest number of edges of `small` mapped onto edges of `large` by an
/// injective node map.
fn max_preserved(small: &Graph, large: &Graph) -> usize {
    let n = small.node_count();
    if n == 0 {
        return 0;
    }
    // Assign in descending-degree order so edges are counted early.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&u| std::cmp::Reverse(small.out_degree(u)));
    let mut position = vec![0; n];
    for (i, &u) in order.iter().enumerate() {
        position[u] = i;
    }
    // back[i]: neighbours of order[i] assigned before it.
    let back: Vec<Vec<usize>> = order
        .iter()
        .map(|&u| {
            small
                .neighbors(u)
                .expect("in range")
                .filter(|&v| position[v] < position[u])
                .collect()
        })
        .collect();
    // Edges still open after assigning order[..i].
    let mut open_after = vec![0; n + 1];
    for i in (0..n).rev() {
        open_after[i] = open_after[i + 1] + back[i].len();
    }
    let limit = small.edge_count().min(large.edge_count());
    let mut ctx = GedSearch {
        large,
        order: &order,
        back: &back,
        open_after: &open_after,
        image: vec![usize::MAX; n],
        used: vec![false; large.node_count()],
        best: 0,
        limit,
    };
    ctx.extend(0, 0);
    ctx.best
}

struct GedSearch<'a> {
    large: &'a Graph,
    order: &'a [usize],
    back: &'a [Vec<usize>],
    open_after: &'a [usize],
    image: Vec<usize>,
    used: Vec<bool>,
    best: usize,
    limit: usize,
}

impl GedSearch<'_> {
    fn extend(&mut self, i: usize, preserved: usize) {
        if preserved > self.best {
            self.best = preserved;
        }
        if i == self.order.len() || self.best == self.limit {
            return;
        }
        if preserved + self.open_after[i] <= self.best {
            return;
        }
        let u = self.order[i];
        for x in 0..self.large.node_count() {
            if self.used[x] {
                continue;
            }
            let gained = self.back[i]
                .iter()
                .filter(|&&v| self.large.has_edge(x, self.image[v]))
                .count();
            self.used[x] = true;
            self.image[u] = x;
            self.extend(i + 1, preserved + gained);
            self.image[u] = usize::MAX;
            self.used[x] = false;
        }
    }
}

/// Exact isomorphism test by backtracking over node bijections.
///
/// Rejects early on node count, edge count and degree sequences; the search
/// maps nodes in breadth-first order and keeps only candidates with matching
/// degrees and matching adjacency to everything mapped so far.
pub fn is_isomorphic(g: &Graph, h: &Graph, size_cap: usize) -> Result<bool> {
    for x in [g, h] {
        if x.node_count() > size_cap {
            return Err(Error::SizeCapExceeded {
                size: x.node_count(),
                cap: size_cap,
            });
        }
    }
    if g.is_directed() != h.is_directed()
        || g.node_count() != h.node_count()
        || g.edge_count() != h.edge_count()
        || degree_profile(g) != degree_profile(h)
    {
        return Ok(false);
    }
    let n = g.node_count();
    if n == 0 {
        return Ok(true);
    }
    let order = search_order(g);
    let mut iso = IsoSearch {
        g,
        h,
        order: &order,
        map: vec![usize::MAX; n],
        used: vec![false; n],
    };
    Ok(iso.extend(0))
}

/// Checks that `map` (indexed by `g` node) is an isomorphism onto `h`.
pub fn is_isomorphism(g: &Graph, h: &Graph, map: &[usize]) -> bool {
    if g.node_count() != h.node_count()
        || g.edge_count() != h.edge_count()
        || g.is_directed() != h.is_directed()
        || map.len() != g.node_count()
    {
        return false;
    }
    let mut seen = vec![false; map.len()];
    if map
        .iter()
        .any(|&x| x >= seen.len() || std::mem::replace(&mut seen[x], true))
    {
        return false;
    }
    g.edges()
        .into_iter()
        .all(|(u, v)| h.has_edge(map[u], map[v]))
}

fn degree_profile(g: &Graph) -> Vec<(usize, usize)> {
    let mut d: Vec<(usize, usize)> = (0..g.node_count())
        .map(|u| (g.out_degree(u), g.in_degree(u)))
        .collect();
    d.sort_unstable();
    d
}

fn search_order(g: &Graph) -> Vec<usize> {
    let n = g.node_count();
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&u| std::cmp::Reverse(g.out_degree(u) + g.in_degree(u)));
    for root in by_degree {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut head = order.len();
        order.push(root);
        while head < order.len() {
            let u = order[head];
            head += 1;
            let nbrs: Vec<usize> = g
                .neighbors(u)
                .expect("in range")
                .chain(g.in_neighbors(u).expect("in range"))
                .collect();
            for v in nbrs {
                if !seen[v] {
                    seen[v] = true;
                    order.push(v);
                }
            }
        }
    }
    order
}

struct IsoSearch<'a> {
    g: &'a Graph,
    h: &'a Graph,
    order: &'a [usize],
    map: Vec<usize>,
    used: Vec<bool>,
}

impl IsoSearch<'_> {
    fn extend(&mut self, i: usize) -> bool {
        if i == self.order.len() {
            return true;
        }
        let u = self.order[i];
        for x in 0..self.h.node_count() {
            if self.used[x] || !self.compatible(u, x, i) {
                continue;
            }
            self.map[u] = x;
            self.used[x] = true;
            if self.extend(i + 1) {
                return true;
            }
            self.used[x] = false;
            self.map[u] = usize::MAX;
        }
        false
    }

    fn compatible(&self, u: usize, x: usize, i: usize) -> bool {
        if self.g.out_degree(u) != self.h.out_degree(x)
            || self.g.in_degree(u) != self.h.in_degree(x)
        {
            return false;
        }
        self.order[..i].iter().all(|&v| {
            let y = self.map[v];
            self.g.has_edge(u, v) == self.h.has_edge(x, y)
                && self.g.has_edge(v, u) == self.h.has_edge(y, x)
        })
    }
}
