//! Canonical strings by exhaustive backtracking.
//!
//! The search runs the greedy encoder from every valid start node and, at
//! each node insertion, branches over every unmapped neighbour instead of
//! taking the smallest id. Pair order and operation priority stay as in the
//! greedy encoder. The canonical string is the shortest result, ties broken
//! by the symbol order `C < N < P < V < W < c < n < p < v`.
//!
//! Branch-and-bound uses the number of edges still to place as a lower bound
//! on the remaining length (every structural instruction places exactly one
//! edge). A branch that can at best tie the current length is also cut once
//! its prefix sorts after the best string's prefix.

use std::collections::BTreeSet;
use std::time::Instant;

use crate::encoder::{valid_starts, Candidate, Walker};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::instruction::{render, Instruction};

pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Which choices the search branches over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SearchMode {
    /// Start node and neighbour choice at node insertions.
    #[default]
    NeighborChoice,
    /// Additionally every applicable (displacement pair, operation)
    /// combination at every step. Only practical for very small graphs.
    Strict,
}

#[derive(Debug, Clone)]
pub struct CanonicalOptions {
    /// Maximum number of search nodes; `None` is unlimited.
    pub budget: Option<u64>,
    pub deadline: Option<Instant>,
    /// Branch-and-bound on/off. Turning it off never changes the result.
    pub prune: bool,
    pub mode: SearchMode,
}

impl Default for CanonicalOptions {
    fn default() -> Self {
        Self {
            budget: Some(DEFAULT_BUDGET),
            deadline: None,
            prune: true,
            mode: SearchMode::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalResult {
    pub w_star: String,
    pub length: usize,
    /// Search nodes visited.
    pub explored: u64,
}

/// Canonical string with the default options and the given budget
/// (`None` keeps the default of 10^8 search nodes).
pub fn canonical_string(g: &Graph, budget: Option<u64>) -> Result<CanonicalResult> {
    let opts = CanonicalOptions {
        budget: budget.or(Some(DEFAULT_BUDGET)),
        ..CanonicalOptions::default()
    };
    canonical_string_with(g, &opts)
}

pub fn canonical_string_with(g: &Graph, opts: &CanonicalOptions) -> Result<CanonicalResult> {
    let starts = starts(g)?;
    let mut search = Search::new(opts, Goal::Best);
    for v0 in starts {
        let mut walker = Walker::new(g, v0)?;
        search.dfs(&mut walker)?;
    }
    let best = search.best.expect("every valid start completes");
    Ok(CanonicalResult {
        length: best.len(),
        w_star: render(&best),
        explored: search.explored,
    })
}

/// Every string the backtracking encoder can produce with length at most
/// `length_cap`, using the default neighbour-choice branching.
pub fn enumerate_strings(g: &Graph, length_cap: usize) -> Result<BTreeSet<String>> {
    enumerate_strings_with(g, length_cap, SearchMode::NeighborChoice)
}

pub fn enumerate_strings_with(
    g: &Graph,
    length_cap: usize,
    mode: SearchMode,
) -> Result<BTreeSet<String>> {
    let opts = CanonicalOptions {
        budget: None,
        deadline: None,
        prune: false,
        mode,
    };
    let mut search = Search::new(&opts, Goal::Collect { cap: length_cap });
    for v0 in starts(g)? {
        let mut walker = Walker::new(g, v0)?;
        search.dfs(&mut walker)?;
    }
    Ok(search.collected.into_iter().map(|w| render(&w)).collect())
}

/// Whether two graphs share a canonical string.
pub fn is_canonical_equal(g: &Graph, h: &Graph) -> Result<bool> {
    if g.node_count() != h.node_count() || g.edge_count() != h.edge_count() {
        // Different sizes can never share a canonical string; still surface
        // encoding errors for inputs that cannot be encoded at all.
        starts(g)?;
        starts(h)?;
        return Ok(false);
    }
    Ok(canonical_string(g, None)?.w_star == canonical_string(h, None)?.w_star)
}

fn starts(g: &Graph) -> Result<Vec<usize>> {
    if g.is_empty() {
        return Err(Error::InvalidArgument(
            "cannot encode the empty graph".into(),
        ));
    }
    let s = valid_starts(g);
    if s.is_empty() {
        Err(Error::NoValidStart)
    } else {
        Ok(s)
    }
}

enum Goal {
    Best,
    Collect { cap: usize },
}

struct Search<'o> {
    opts: &'o CanonicalOptions,
    goal: Goal,
    explored: u64,
    best: Option<Vec<Instruction>>,
    collected: BTreeSet<Vec<Instruction>>,
}

impl<'o> Search<'o> {
    fn new(opts: &'o CanonicalOptions, goal: Goal) -> Self {
        Self {
            opts,
            goal,
            explored: 0,
            best: None,
            collected: BTreeSet::new(),
        }
    }

    fn tick(&mut self) -> Result<()> {
        self.explored += 1;
        if let Some(budget) = self.opts.budget {
            if self.explored > budget {
                return Err(Error::BudgetExhausted {
                    budget,
                    explored: self.explored - 1,
                    best_so_far: self.best.as_deref().map(render),
                });
            }
        }
        if let Some(deadline) = self.opts.deadline {
            if self.explored.is_multiple_of(256) && Instant::now() >= deadline {
                return Err(Error::DeadlineExceeded {
                    explored: self.explored,
                    best_so_far: self.best.as_deref().map(render),
                });
            }
        }
        Ok(())
    }

    /// Longest string still worth extending, if any limit applies.
    fn length_limit(&self) -> Option<usize> {
        match self.goal {
            Goal::Collect { cap } => Some(cap),
            Goal::Best if self.opts.prune => self.best.as_ref().map(Vec::len),
            Goal::Best => None,
        }
    }

    /// True when no completion of `w` can beat the current best.
    fn dominated(&self, w: &[Instruction], lower_bound: usize) -> bool {
        if let Some(limit) = self.length_limit() {
            if lower_bound > limit {
                return true;
            }
        }
        match (&self.goal, &self.best) {
            // Only a branch that can at best tie on length loses on order.
            (Goal::Best, Some(best)) if self.opts.prune && lower_bound >= best.len() => {
                let k = w.len().min(best.len());
                w[..k] > best[..k]
            }
            _ => false,
        }
    }

    fn finish(&mut self, w: &[Instruction]) {
        match self.goal {
            Goal::Collect { cap } => {
                if w.len() <= cap {
                    self.collected.insert(w.to_vec());
                }
            }
            Goal::Best => {
                let better = match &self.best {
                    None => true,
                    Some(b) => (w.len(), w) < (b.len(), b.as_slice()),
                };
                if better {
                    self.best = Some(w.to_vec());
                }
            }
        }
    }

    fn candidates(&self, walker: &Walker) -> Vec<Candidate> {
        match self.opts.mode {
            SearchMode::NeighborChoice => walker.first_applicable().into_iter().collect(),
            SearchMode::Strict => {
                let slack = self.length_limit().map_or(usize::MAX, |l| {
                    (l + 1).saturating_sub(walker.w.len() + walker.e_left)
                });
                let mut out = Vec::new();
                walker.scan(slack, &mut |c| {
                    out.push(c);
                    true
                });
                out
            }
        }
    }

    fn dfs(&mut self, walker: &mut Walker) -> Result<()> {
        self.tick()?;
        if walker.is_done() {
            self.finish(&walker.w);
            return Ok(());
        }
        if self.dominated(&walker.w, walker.w.len() + walker.e_left) {
            return Ok(());
        }
        for cand in self.candidates(walker) {
            let after = walker.w.len() + cand.emitted_len() + walker.e_left - 1;
            if let Some(limit) = self.length_limit() {
                if after > limit {
                    continue;
                }
            }
            let choices = walker.choices(&cand);
            if choices.is_empty() {
                let undo = walker.commit(&cand, None);
                let r = self.dfs(walker);
                walker.undo(undo);
                r?;
            } else {
                for c in choices {
                    let undo = walker.commit(&cand, Some(c));
                    let r = self.dfs(walker);
                    walker.undo(undo);
                    r?;
                }
            }
        }
        Ok(())
    }
}
