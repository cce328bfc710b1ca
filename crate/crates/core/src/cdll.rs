//! Array-backed circular doubly-linked list.
//!
//! Records live in an append-only arena and are addressed by their arena
//! index. Each record carries a graph-node id as its payload; the arena index
//! and the payload are separate id spaces.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
struct Record {
    payload: usize,
    next: usize,
    prev: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Cdll {
    nodes: Vec<Record>,
}

impl Cdll {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn is_live(&self, idx: usize) -> bool {
        idx < self.nodes.len()
    }

    /// Splices a new record holding `payload` right after `anchor`.
    ///
    /// `None` is only accepted on an empty list and creates a self-linked
    /// singleton.
    pub fn insert_after(&mut self, anchor: Option<usize>, payload: usize) -> Result<usize> {
        let idx = self.nodes.len();
        match anchor {
            None if self.nodes.is_empty() => {
                self.nodes.push(Record {
                    payload,
                    next: idx,
                    prev: idx,
                });
            }
            None => return Err(Error::MissingAnchor),
            Some(a) => {
                self.live(a)?;
                let after = self.nodes[a].next;
                self.nodes.push(Record {
                    payload,
                    next: after,
                    prev: a,
                });
                self.nodes[a].next = idx;
                self.nodes[after].prev = idx;
            }
        }
        Ok(idx)
    }

    /// Unlinks the most recently inserted record. Only valid while undoing
    /// insertions in reverse order, as the encoder's backtracking does.
    pub(crate) fn unlink_last(&mut self) {
        let Some(rec) = self.nodes.pop() else { return };
        if self.nodes.is_empty() {
            return;
        }
        self.nodes[rec.prev].next = rec.next;
        self.nodes[rec.next].prev = rec.prev;
    }

    pub fn payload(&self, idx: usize) -> usize {
        self.nodes[idx].payload
    }

    pub fn next(&self, idx: usize) -> usize {
        self.nodes[idx].next
    }

    pub fn prev(&self, idx: usize) -> usize {
        self.nodes[idx].prev
    }

    /// Record reached after `|steps|` moves forward (positive) or backward
    /// (negative). Steps wrap around, so only `steps mod len` moves are taken.
    pub fn walk(&self, start: usize, steps: i64) -> usize {
        let len = self.nodes.len() as i64;
        if len <= 1 || steps == 0 {
            return start;
        }
        let fwd = steps.rem_euclid(len);
        let mut cur = start;
        if fwd <= len / 2 {
            for _ in 0..fwd {
                cur = self.nodes[cur].next;
            }
        } else {
            for _ in 0..(len - fwd) {
                cur = self.nodes[cur].prev;
            }
        }
        cur
    }

    /// Payloads in circular order starting at `start`.
    pub fn payloads_from(&self, start: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.nodes.len());
        if self.nodes.is_empty() {
            return out;
        }
        let mut cur = start;
        loop {
            out.push(self.nodes[cur].payload);
            cur = self.nodes[cur].next;
            if cur == start {
                break;
            }
        }
        out
    }

    /// Checks circularity and link symmetry.
    pub fn validate(&self) -> std::result::Result<(), String> {
        let n = self.nodes.len();
        for (i, r) in self.nodes.iter().enumerate() {
            if r.next >= n || r.prev >= n {
                return Err(format!("record {i} links outside the arena"));
            }
            if self.nodes[r.next].prev != i || self.nodes[r.prev].next != i {
                return Err(format!("record {i} has asymmetric links"));
            }
        }
        if n > 0 {
            let mut cur = 0;
            for step in 0..n {
                cur = self.nodes[cur].next;
                if cur == 0 && step + 1 != n {
                    return Err("cycle shorter than the list".into());
                }
            }
            if cur != 0 {
                return Err("cycle does not return to start".into());
            }
        }
        Ok(())
    }

    fn live(&self, idx: usize) -> Result<()> {
        if self.is_live(idx) {
            Ok(())
        } else {
            Err(Error::DeadCdllIndex(idx))
        }
    }
}
