//! Greedy graph-to-string encoding.
//!
//! The encoder replays the decoder while it builds the output: it keeps its
//! own traversal list and two pointers, and at every step scans pointer
//! displacements in increasing cost until some structural instruction would
//! add a node or edge of the input graph that is still missing.

use std::cmp::Ordering;

use crate::cdll::Cdll;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::instruction::{render, Instruction};
use crate::rng::Prng;

/// Pointer steps for one candidate: `primary` for the primary pointer and
/// `secondary` for the secondary pointer. Positive is forward.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DisplacementPair {
    pub primary: i64,
    pub secondary: i64,
}

impl DisplacementPair {
    pub const fn new(primary: i64, secondary: i64) -> Self {
        Self { primary, secondary }
    }

    pub fn cost(&self) -> u64 {
        self.primary.unsigned_abs() + self.secondary.unsigned_abs()
    }

    /// Ordering key `(|a|+|b|, |a|, a, b)`.
    pub fn sort_key(&self) -> (u64, u64, i64, i64) {
        (
            self.cost(),
            self.primary.unsigned_abs(),
            self.primary,
            self.secondary,
        )
    }
}

impl From<(i64, i64)> for DisplacementPair {
    fn from((a, b): (i64, i64)) -> Self {
        Self::new(a, b)
    }
}

/// Lazily yields all pairs in `[-m, m]^2` in sort-key order.
pub fn pairs_in_order(m: usize) -> impl Iterator<Item = DisplacementPair> {
    let m = m as i64;
    (0..=2 * m).flat_map(move |cost| {
        let lo = (cost - m).max(0);
        let hi = cost.min(m);
        (lo..=hi).flat_map(move |abs_a| {
            let abs_b = cost - abs_a;
            signed(abs_a).flat_map(move |a| signed(abs_b).map(move |b| DisplacementPair::new(a, b)))
        })
    })
}

fn signed(abs: i64) -> impl Iterator<Item = i64> + Clone {
    let second = (abs != 0).then_some(abs);
    std::iter::once(-abs).chain(second)
}

/// All `(2m+1)^2` displacement pairs, sorted.
pub fn sorted_pairs(m: usize) -> Result<Vec<DisplacementPair>> {
    if m < 1 {
        return Err(Error::InvalidArgument(
            "pair range must be at least 1".into(),
        ));
    }
    Ok(pairs_in_order(m).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Pointer {
    Primary,
    Secondary,
}

/// Move instructions that displace `which` by `steps`.
pub fn moves(steps: i64, which: Pointer) -> String {
    let mut out = Vec::new();
    push_moves(&mut out, steps, which);
    render(&out)
}

fn push_moves(out: &mut Vec<Instruction>, steps: i64, which: Pointer) {
    use Instruction::*;
    let sym = match (which, steps >= 0) {
        (Pointer::Primary, true) => NextPrimary,
        (Pointer::Primary, false) => PrevPrimary,
        (Pointer::Secondary, true) => NextSecondary,
        (Pointer::Secondary, false) => PrevSecondary,
    };
    out.extend(std::iter::repeat_n(sym, steps.unsigned_abs() as usize));
}

/// An encoded graph plus the node correspondence used to produce it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EncodeResult {
    pub string: String,
    pub start: usize,
    /// `iota[input] = output` node id in the decoded graph.
    pub iota: Vec<usize>,
    /// `iota_inv[output] = input` node id.
    pub iota_inv: Vec<usize>,
    /// Number of pointer-move instructions in `string`.
    pub move_cost: usize,
}

impl EncodeResult {
    pub fn len(&self) -> usize {
        self.string.len()
    }

    pub fn is_empty(&self) -> bool {
        self.string.is_empty()
    }
}

/// The structural instruction a candidate would emit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Op {
    Node(Pointer),
    Edge(Pointer),
}

impl Op {
    pub(crate) const PRIORITY: [Op; 4] = [
        Op::Node(Pointer::Primary),
        Op::Node(Pointer::Secondary),
        Op::Edge(Pointer::Primary),
        Op::Edge(Pointer::Secondary),
    ];
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct Candidate {
    pub pair: DisplacementPair,
    pub at_primary: usize,
    pub at_secondary: usize,
    pub op: Op,
}

impl Candidate {
    /// Instructions this candidate appends, including its moves.
    pub(crate) fn emitted_len(&self) -> usize {
        let (a, b) = (
            self.pair.primary.unsigned_abs(),
            self.pair.secondary.unsigned_abs(),
        );
        1 + match self.op {
            Op::Node(Pointer::Primary) => a,
            Op::Node(Pointer::Secondary) => b,
            Op::Edge(_) => a + b,
        } as usize
    }
}

pub(crate) struct Undo {
    primary: usize,
    secondary: usize,
    w_len: usize,
    moves: usize,
    mapped: Option<usize>,
    edge: (usize, usize),
}

/// Square bit matrix of input edges already reproduced in the output.
#[derive(Debug, Clone)]
struct EdgeMarks {
    words: usize,
    bits: Vec<u64>,
}

impl EdgeMarks {
    fn new(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        Self {
            words,
            bits: vec![0; n * words],
        }
    }

    fn slot(&self, u: usize, v: usize) -> (usize, u64) {
        (u * self.words + v / 64, 1u64 << (v % 64))
    }

    fn get(&self, u: usize, v: usize) -> bool {
        let (i, m) = self.slot(u, v);
        self.bits[i] & m != 0
    }

    fn set(&mut self, u: usize, v: usize, on: bool) {
        let (i, m) = self.slot(u, v);
        if on {
            self.bits[i] |= m;
        } else {
            self.bits[i] &= !m;
        }
    }
}

/// Encoder working state. Shared by the greedy encoder and the canonical
/// search, which backtracks through it with [`Walker::undo`].
pub(crate) struct Walker<'g> {
    input: &'g Graph,
    cdll: Cdll,
    primary: usize,
    secondary: usize,
    to_out: Vec<Option<usize>>,
    to_in: Vec<usize>,
    pending: Vec<usize>,
    placed: EdgeMarks,
    pub n_left: usize,
    pub e_left: usize,
    move_cost: usize,
    pub w: Vec<Instruction>,
    start: usize,
}

impl<'g> Walker<'g> {
    /// Fails if `v0` is out of range or does not reach every node.
    pub(crate) fn new(input: &'g Graph, v0: usize) -> Result<Self> {
        let n = input.node_count();
        if n == 0 {
            return Err(Error::InvalidArgument(
                "cannot encode the empty graph".into(),
            ));
        }
        if v0 >= n {
            return Err(Error::NodeOutOfRange {
                node: v0,
                node_count: n,
            });
        }
        if let Some(node) = input.first_unreachable_from(v0) {
            return Err(Error::Unreachable { start: v0, node });
        }
        let mut cdll = Cdll::new();
        let l0 = cdll.insert_after(None, 0)?;
        let pending = (0..n).map(|u| input.out_degree(u)).collect();
        let mut walker = Self {
            input,
            cdll,
            primary: l0,
            secondary: l0,
            to_out: vec![None; n],
            to_in: Vec::with_capacity(n),
            pending,
            placed: EdgeMarks::new(n),
            n_left: n - 1,
            e_left: input.edge_count(),
            move_cost: 0,
            w: Vec::new(),
            start: v0,
        };
        walker.map_node(v0);
        Ok(walker)
    }

    pub(crate) fn is_done(&self) -> bool {
        self.n_left == 0 && self.e_left == 0
    }

    fn map_node(&mut self, c: usize) {
        let u = self.to_in.len();
        self.to_in.push(c);
        self.to_out[c] = Some(u);
        for x in self.input.in_neighbors(c).expect("node in range") {
            self.pending[x] -= 1;
        }
    }

    fn unmap_last(&mut self) {
        let c = self.to_in.pop().expect("a mapped node to undo");
        self.to_out[c] = None;
        for x in self.input.in_neighbors(c).expect("node in range") {
            self.pending[x] += 1;
        }
    }

    fn input_at(&self, record: usize) -> usize {
        self.to_in[self.cdll.payload(record)]
    }

    fn edge_key(&self, u: usize, v: usize) -> (usize, usize) {
        if self.input.is_directed() || u < v {
            (u, v)
        } else {
            (v, u)
        }
    }

    fn edge_missing(&self, from: usize, to: usize) -> bool {
        let (u, v) = self.edge_key(from, to);
        self.input.has_edge(from, to) && !self.placed.get(u, v)
    }

    /// Whether `op` adds something new with the pointers at the given records.
    fn applicable(&self, op: Op, l1: usize, l2: usize) -> bool {
        match op {
            Op::Node(Pointer::Primary) => self.n_left > 0 && self.pending[self.input_at(l1)] > 0,
            Op::Node(Pointer::Secondary) => self.n_left > 0 && self.pending[self.input_at(l2)] > 0,
            Op::Edge(Pointer::Primary) => self.edge_missing(self.input_at(l1), self.input_at(l2)),
            Op::Edge(Pointer::Secondary) => {
                self.input.is_directed() && self.edge_missing(self.input_at(l2), self.input_at(l1))
            }
        }
    }

    /// Records reachable from `from` for every displacement in `[-m, m]`,
    /// indexed by `displacement + m`.
    fn reach(&self, from: usize, m: usize) -> Vec<usize> {
        let mut out = vec![from; 2 * m + 1];
        let (mut fwd, mut back) = (from, from);
        for k in 1..=m {
            fwd = self.cdll.next(fwd);
            back = self.cdll.prev(back);
            out[m + k] = fwd;
            out[m - k] = back;
        }
        out
    }

    /// The first applicable candidate in pair order, trying operations in
    /// priority order at each pair.
    pub(crate) fn first_applicable(&self) -> Option<Candidate> {
        let mut found = None;
        self.scan(usize::MAX, &mut |c| {
            found = Some(c);
            false
        });
        found
    }

    /// Visits applicable candidates in (pair, priority) order while the
    /// emitted length stays within `max_emit`. The visitor returns whether to
    /// keep scanning. Node insertions are only offered with the other pointer
    /// at rest, since its displacement would not be emitted.
    pub(crate) fn scan(&self, max_emit: usize, visit: &mut dyn FnMut(Candidate) -> bool) {
        let m = self.cdll.len();
        let r1 = self.reach(self.primary, m);
        let r2 = self.reach(self.secondary, m);
        let mi = m as i64;
        for pair in pairs_in_order(m) {
            if pair.cost() as usize + 1 > max_emit {
                return;
            }
            let l1 = r1[(pair.primary + mi) as usize];
            let l2 = r2[(pair.secondary + mi) as usize];
            for op in Op::PRIORITY {
                let idle_moved = match op {
                    Op::Node(Pointer::Primary) => pair.secondary != 0,
                    Op::Node(Pointer::Secondary) => pair.primary != 0,
                    Op::Edge(_) => false,
                };
                if idle_moved || !self.applicable(op, l1, l2) {
                    continue;
                }
                let cand = Candidate {
                    pair,
                    at_primary: l1,
                    at_secondary: l2,
                    op,
                };
                if !visit(cand) {
                    return;
                }
            }
        }
    }

    /// Unmapped out-neighbours of the input node under the acting pointer,
    /// ascending.
    pub(crate) fn choices(&self, cand: &Candidate) -> Vec<usize> {
        let at = match cand.op {
            Op::Node(Pointer::Primary) => cand.at_primary,
            Op::Node(Pointer::Secondary) => cand.at_secondary,
            Op::Edge(_) => return Vec::new(),
        };
        self.input
            .neighbors(self.input_at(at))
            .expect("node in range")
            .filter(|&c| self.to_out[c].is_none())
            .collect()
    }

    /// Applies a candidate. `choice` is the input node a node insertion maps.
    pub(crate) fn commit(&mut self, cand: &Candidate, choice: Option<usize>) -> Undo {
        let undo_base = (self.primary, self.secondary, self.w.len());
        let DisplacementPair {
            primary: a,
            secondary: b,
        } = cand.pair;
        let (moves, mapped, edge) = match cand.op {
            Op::Node(ptr) => {
                let (at, steps) = match ptr {
                    Pointer::Primary => (cand.at_primary, a),
                    Pointer::Secondary => (cand.at_secondary, b),
                };
                let from = self.input_at(at);
                let c = choice.expect("node insertion needs a neighbour choice");
                debug_assert!(self.input.has_edge(from, c) && self.to_out[c].is_none());
                push_moves(&mut self.w, steps, ptr);
                self.w.push(match ptr {
                    Pointer::Primary => Instruction::NodePrimary,
                    Pointer::Secondary => Instruction::NodeSecondary,
                });
                let u = self.to_in.len();
                self.map_node(c);
                self.cdll.insert_after(Some(at), u).expect("live record");
                match ptr {
                    Pointer::Primary => self.primary = at,
                    Pointer::Secondary => self.secondary = at,
                }
                self.n_left -= 1;
                (
                    steps.unsigned_abs() as usize,
                    Some(c),
                    self.edge_key(from, c),
                )
            }
            Op::Edge(ptr) => {
                let x = self.input_at(cand.at_primary);
                let y = self.input_at(cand.at_secondary);
                push_moves(&mut self.w, a, Pointer::Primary);
                push_moves(&mut self.w, b, Pointer::Secondary);
                let (from, to, sym) = match ptr {
                    Pointer::Primary => (x, y, Instruction::EdgePrimary),
                    Pointer::Secondary => (y, x, Instruction::EdgeSecondary),
                };
                self.w.push(sym);
                self.primary = cand.at_primary;
                self.secondary = cand.at_secondary;
                (cand.pair.cost() as usize, None, self.edge_key(from, to))
            }
        };
        self.placed.set(edge.0, edge.1, true);
        self.e_left -= 1;
        self.move_cost += moves;
        Undo {
            primary: undo_base.0,
            secondary: undo_base.1,
            w_len: undo_base.2,
            moves,
            mapped,
            edge,
        }
    }

    pub(crate) fn undo(&mut self, undo: Undo) {
        self.placed.set(undo.edge.0, undo.edge.1, false);
        self.e_left += 1;
        if undo.mapped.is_some() {
            self.unmap_last();
            self.cdll.unlink_last();
            self.n_left += 1;
        }
        self.move_cost -= undo.moves;
        self.w.truncate(undo.w_len);
        self.primary = undo.primary;
        self.secondary = undo.secondary;
    }

    fn into_result(self) -> EncodeResult {
        let iota = self
            .to_out
            .iter()
            .map(|o| o.expect("every node is mapped on completion"))
            .collect();
        EncodeResult {
            string: render(&self.w),
            start: self.start,
            iota,
            iota_inv: self.to_in,
            move_cost: self.move_cost,
        }
    }
}

/// Greedy encoding from start node `v0`.
///
/// Node insertions map the smallest-id unmapped neighbour.
pub fn graph_to_string_greedy(g: &Graph, v0: usize) -> Result<EncodeResult> {
    let mut walker = Walker::new(g, v0)?;
    while !walker.is_done() {
        let cand = walker
            .first_applicable()
            .expect("a reachable missing node or edge always has a candidate");
        let choice = walker.choices(&cand).first().copied();
        walker.commit(&cand, choice);
    }
    Ok(walker.into_result())
}

/// Start nodes from which every node is reachable.
pub fn valid_starts(g: &Graph) -> Vec<usize> {
    if !g.is_directed() {
        return if g.is_connected() {
            (0..g.node_count()).collect()
        } else {
            Vec::new()
        };
    }
    (0..g.node_count())
        .filter(|&v| g.all_reachable_from(v))
        .collect()
}

/// Orders encodings by length, then symbol order, then start node.
pub fn compare_encodings(a: &EncodeResult, b: &EncodeResult) -> Ordering {
    a.len()
        .cmp(&b.len())
        .then_with(|| crate::instruction::cmp_symbol_order(&a.string, &b.string))
        .then_with(|| a.start.cmp(&b.start))
}

/// Greedy from every valid start; keeps the best under [`compare_encodings`].
pub fn graph_to_string_greedy_min(g: &Graph) -> Result<EncodeResult> {
    check_nonempty(g)?;
    valid_starts(g)
        .into_iter()
        .map(|v| graph_to_string_greedy(g, v))
        .try_fold(None::<EncodeResult>, |best, r| {
            let r = r?;
            Ok(Some(match best {
                Some(b) if compare_encodings(&b, &r).is_le() => b,
                _ => r,
            }))
        })?
        .ok_or(Error::NoValidStart)
}

/// Greedy from a start drawn uniformly among the valid starts.
pub fn graph_to_string_greedy_rnd(g: &Graph, seed: u64) -> Result<EncodeResult> {
    check_nonempty(g)?;
    let starts = valid_starts(g);
    if starts.is_empty() {
        return Err(Error::NoValidStart);
    }
    let v0 = starts[Prng::new(seed).index(starts.len())];
    graph_to_string_greedy(g, v0)
}

fn check_nonempty(g: &Graph) -> Result<()> {
    if g.is_empty() {
        Err(Error::InvalidArgument(
            "cannot encode the empty graph".into(),
        ))
    } else {
        Ok(())
    }
}
