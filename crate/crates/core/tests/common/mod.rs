//! Reference implementations for cross-checking, kept deliberately naive:
//! the traversal list is a plain `Vec` of payloads in circular order,
//! pointers are positions in it, and every search step clones its state.

#![allow(dead_code)]

use std::cmp::Ordering;
use std::collections::BTreeSet;

use graphstring_core::{generate, Family, Graph, GraphSpec, Prng};

pub const SIGMA: &str = "NnPpVvCcW";
const ORDER: &str = "CNPVWcnpv";

pub fn symbol_cmp(a: &str, b: &str) -> Ordering {
    let rank = |c: char| ORDER.find(c).expect("instruction symbol");
    a.len().cmp(&b.len()).then_with(|| {
        a.chars()
            .map(rank)
            .collect::<Vec<_>>()
            .cmp(&b.chars().map(rank).collect::<Vec<_>>())
    })
}

pub struct RefDecode {
    pub nodes: usize,
    pub edges: BTreeSet<(usize, usize)>,
    pub order: Vec<usize>,
    pub p1: usize,
    pub p2: usize,
}

pub fn ref_decode(w: &str, directed: bool) -> RefDecode {
    let mut d = RefDecode {
        nodes: 1,
        edges: BTreeSet::new(),
        order: vec![0],
        p1: 0,
        p2: 0,
    };
    let key = |u: usize, v: usize| if directed || u < v { (u, v) } else { (v, u) };
    for ch in w.chars() {
        let len = d.order.len();
        match ch {
            'N' => d.p1 = (d.p1 + 1) % len,
            'P' => d.p1 = (d.p1 + len - 1) % len,
            'n' => d.p2 = (d.p2 + 1) % len,
            'p' => d.p2 = (d.p2 + len - 1) % len,
            'V' | 'v' => {
                let at = if ch == 'V' { d.p1 } else { d.p2 };
                let u = d.nodes;
                d.nodes += 1;
                d.edges.insert(key(d.order[at], u));
                d.order.insert(at + 1, u);
                if d.p1 > at {
                    d.p1 += 1;
                }
                if d.p2 > at {
                    d.p2 += 1;
                }
            }
            'C' | 'c' => {
                let (x, y) = (d.order[d.p1], d.order[d.p2]);
                let (from, to) = if ch == 'C' { (x, y) } else { (y, x) };
                if from != to {
                    d.edges.insert(key(from, to));
                }
            }
            'W' => {}
            other => panic!("not an instruction: {other}"),
        }
    }
    d
}

pub fn ref_pairs(m: i64) -> Vec<(i64, i64)> {
    let mut v: Vec<(i64, i64)> = (-m..=m)
        .flat_map(|a| (-m..=m).map(move |b| (a, b)))
        .collect();
    v.sort_by_key(|&(a, b)| (a.abs() + b.abs(), a.abs(), a, b));
    v
}

fn steps(k: i64, fwd: char, back: char) -> String {
    let c = if k >= 0 { fwd } else { back };
    std::iter::repeat_n(c, k.unsigned_abs() as usize).collect()
}

#[derive(Clone)]
pub struct RefEncoder<'g> {
    g: &'g Graph,
    order: Vec<usize>,
    p1: usize,
    p2: usize,
    to_out: Vec<Option<usize>>,
    to_in: Vec<usize>,
    out_edges: BTreeSet<(usize, usize)>,
    n_left: usize,
    e_left: usize,
    pub w: String,
    pub move_cost: usize,
}

/// Which (pair, operation) combinations a step may commit.
#[derive(Clone, Copy, PartialEq, Eq)]
pub enum Branching {
    /// First applicable pair and operation, smallest neighbour.
    Greedy,
    /// First applicable pair and operation, every neighbour.
    Neighbors,
    /// Every applicable pair and operation, every neighbour.
    Everything,
}

impl<'g> RefEncoder<'g> {
    pub fn new(g: &'g Graph, v0: usize) -> Self {
        let mut to_out = vec![None; g.node_count()];
        to_out[v0] = Some(0);
        Self {
            g,
            order: vec![0],
            p1: 0,
            p2: 0,
            to_out,
            to_in: vec![v0],
            out_edges: BTreeSet::new(),
            n_left: g.node_count() - 1,
            e_left: g.edge_count(),
            w: String::new(),
            move_cost: 0,
        }
    }

    fn out_key(&self, u: usize, v: usize) -> (usize, usize) {
        if self.g.is_directed() || u < v {
            (u, v)
        } else {
            (v, u)
        }
    }

    fn unmapped_neighbors(&self, pos: usize) -> Vec<usize> {
        let x = self.to_in[self.order[pos]];
        self.g
            .neighbors_sorted(x)
            .unwrap()
            .into_iter()
            .filter(|&c| self.to_out[c].is_none())
            .collect()
    }

    fn edge_todo(&self, from_pos: usize, to_pos: usize) -> bool {
        let (a, b) = (self.order[from_pos], self.order[to_pos]);
        self.g.has_edge(self.to_in[a], self.to_in[b])
            && !self.out_edges.contains(&self.out_key(a, b))
    }

    /// Successor states of one step.
    pub fn successors(&self, mode: Branching) -> Vec<RefEncoder<'g>> {
        let len = self.order.len();
        let mut out = Vec::new();
        for (a, b) in ref_pairs(len as i64) {
            let t1 = (self.p1 as i64 + a).rem_euclid(len as i64) as usize;
            let t2 = (self.p2 as i64 + b).rem_euclid(len as i64) as usize;
            for op in ['V', 'v', 'C', 'c'] {
                let mut found: Vec<RefEncoder<'g>> = Vec::new();
                match op {
                    'V' | 'v' if self.n_left > 0 => {
                        let at = if op == 'V' { t1 } else { t2 };
                        let mut choices = self.unmapped_neighbors(at);
                        if mode == Branching::Greedy {
                            choices.truncate(1);
                        }
                        for c in choices {
                            let mut s = self.clone();
                            let prefix = if op == 'V' {
                                steps(a, 'N', 'P')
                            } else {
                                steps(b, 'n', 'p')
                            };
                            s.w.push_str(&prefix);
                            s.w.push(op);
                            s.move_cost += prefix.len();
                            let u = s.to_in.len();
                            s.to_in.push(c);
                            s.to_out[c] = Some(u);
                            let key = s.out_key(s.order[at], u);
                            s.out_edges.insert(key);
                            s.order.insert(at + 1, u);
                            // Tentative pointer for the acting side, the other stays.
                            let (mut q1, mut q2) = if op == 'V' { (t1, s.p2) } else { (s.p1, t2) };
                            if q1 > at {
                                q1 += 1;
                            }
                            if q2 > at {
                                q2 += 1;
                            }
                            s.p1 = q1;
                            s.p2 = q2;
                            s.n_left -= 1;
                            s.e_left -= 1;
                            found.push(s);
                        }
                    }
                    'C' | 'c' => {
                        let ok = if op == 'C' {
                            self.edge_todo(t1, t2)
                        } else {
                            self.g.is_directed() && self.edge_todo(t2, t1)
                        };
                        if ok {
                            let mut s = self.clone();
                            let prefix = steps(a, 'N', 'P') + &steps(b, 'n', 'p');
                            s.w.push_str(&prefix);
                            s.w.push(op);
                            s.move_cost += prefix.len();
                            let (x, y) = (s.order[t1], s.order[t2]);
                            let key = if op == 'C' {
                                s.out_key(x, y)
                            } else {
                                s.out_key(y, x)
                            };
                            s.out_edges.insert(key);
                            s.p1 = t1;
                            s.p2 = t2;
                            s.e_left -= 1;
                            found.push(s);
                        }
                    }
                    _ => {}
                }
                if !found.is_empty() {
                    if mode != Branching::Everything {
                        return found;
                    }
                    out.extend(found);
                }
            }
        }
        out
    }

    pub fn done(&self) -> bool {
        self.n_left == 0 && self.e_left == 0
    }

    pub fn lower_bound(&self) -> usize {
        self.w.len() + self.e_left
    }
}

pub fn ref_greedy(g: &Graph, v0: usize) -> (String, usize) {
    let mut s = RefEncoder::new(g, v0);
    while !s.done() {
        s = s
            .successors(Branching::Greedy)
            .into_iter()
            .next()
            .expect("greedy step");
    }
    (s.w, s.move_cost)
}

/// Every complete encoding reachable under `mode` from every start in
/// `starts`, capped at `cap` characters.
pub fn ref_all_strings(
    g: &Graph,
    starts: &[usize],
    mode: Branching,
    cap: usize,
) -> BTreeSet<String> {
    fn go(s: RefEncoder, mode: Branching, cap: usize, out: &mut BTreeSet<String>) {
        if s.lower_bound() > cap {
            return;
        }
        if s.done() {
            out.insert(s.w);
            return;
        }
        for t in s.successors(mode) {
            go(t, mode, cap, out);
        }
    }
    let mut out = BTreeSet::new();
    for &v0 in starts {
        go(RefEncoder::new(g, v0), mode, cap, &mut out);
    }
    out
}

/// Shortest, then symbol-order smallest, over the full enumeration.
pub fn ref_canonical(g: &Graph, mode: Branching) -> String {
    let starts: Vec<usize> = (0..g.node_count())
        .filter(|&v| g.all_reachable_from(v))
        .collect();
    ref_all_strings(g, &starts, mode, usize::MAX)
        .into_iter()
        .min_by(|a, b| symbol_cmp(a, b))
        .expect("at least one encoding")
}

pub fn random_string(rng: &mut Prng, max_len: usize) -> String {
    let sigma: Vec<char> = SIGMA.chars().collect();
    let len = rng.index(max_len + 1);
    (0..len).map(|_| sigma[rng.index(sigma.len())]).collect()
}

/// Every labelled graph on `n` nodes (undirected), by edge bitmask.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    (0u64..1 << pairs.len())
        .map(|mask| {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            Graph::from_edges(n, false, &edges).unwrap()
        })
        .collect()
}

pub fn connected_graphs(n: usize) -> Vec<Graph> {
    all_graphs(n)
        .into_iter()
        .filter(Graph::is_connected)
        .collect()
}

/// Seeded corpus over every family, sizes in `sizes`.
pub fn family_corpus(sizes: std::ops::RangeInclusive<usize>, seeds: u64) -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for n in sizes {
        for fam in [Family::Path, Family::Cycle, Family::Complete, Family::Star] {
            out.push((
                format!("{fam}-{n}"),
                generate(&GraphSpec::new(fam, n)).unwrap(),
            ));
        }
        if n >= 4 {
            out.push((
                format!("wheel-{n}"),
                generate(&GraphSpec::new(Family::Wheel, n)).unwrap(),
            ));
        }
        for seed in 0..seeds {
            let specs = [
                GraphSpec::new(Family::RandomTree, n),
                GraphSpec::new(Family::BarabasiAlbert, n).with_param(1.0),
                GraphSpec::new(Family::BarabasiAlbert, n).with_param(2.0),
                GraphSpec::new(Family::ErdosRenyi, n).with_param(0.3),
                GraphSpec::new(Family::ErdosRenyi, n).with_param(0.5),
            ];
            for spec in specs {
                if spec.family == Family::BarabasiAlbert && spec.param as usize >= n {
                    continue;
                }
                let spec = spec.with_seed(seed);
                out.push((
                    format!("{}-{n}-p{}-s{seed}", spec.family, spec.param),
                    generate(&spec).unwrap(),
                ));
            }
        }
    }
    for fam in [Family::Petersen, Family::House] {
        out.push((fam.to_string(), generate(&GraphSpec::new(fam, 0)).unwrap()));
    }
    out
}

/// Random digraph where every node is reachable from node 0: a random
/// arborescence plus extra arcs.
pub fn random_rooted_digraph(rng: &mut Prng, n: usize, extra: usize, acyclic: bool) -> Graph {
    let mut g = Graph::with_nodes(n, true);
    for v in 1..n {
        g.add_edge(rng.index(v), v).unwrap();
    }
    for _ in 0..extra {
        let (u, v) = (rng.index(n), rng.index(n));
        if acyclic && u >= v {
            continue;
        }
        g.add_edge(u, v).unwrap();
    }
    g
}
