//! Decoder: runs an instruction string on the interpreter to build a graph.

use crate::cdll::Cdll;
use crate::error::Result;
use crate::graph::Graph;
use crate::instruction::{parse, Instruction};

/// Graph under construction, the traversal list, and the two pointers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InterpreterState {
    pub graph: Graph,
    pub cdll: Cdll,
    /// Primary pointer (cdll index).
    pub primary: usize,
    /// Secondary pointer (cdll index).
    pub secondary: usize,
}

impl InterpreterState {
    /// One node, one list record, both pointers on it.
    pub fn initial(directed: bool) -> Self {
        let mut graph = Graph::new(directed);
        let u0 = graph.add_node();
        let mut cdll = Cdll::new();
        let l0 = cdll
            .insert_after(None, u0)
            .expect("empty list accepts a headless insert");
        Self {
            graph,
            cdll,
            primary: l0,
            secondary: l0,
        }
    }

    pub fn primary_node(&self) -> usize {
        self.cdll.payload(self.primary)
    }

    pub fn secondary_node(&self) -> usize {
        self.cdll.payload(self.secondary)
    }

    /// Executes one instruction in place.
    pub fn apply(&mut self, instr: Instruction) {
        use Instruction::*;
        match instr {
            NextPrimary => self.primary = self.cdll.next(self.primary),
            PrevPrimary => self.primary = self.cdll.prev(self.primary),
            NextSecondary => self.secondary = self.cdll.next(self.secondary),
            PrevSecondary => self.secondary = self.cdll.prev(self.secondary),
            NodePrimary => self.grow(self.primary),
            NodeSecondary => self.grow(self.secondary),
            EdgePrimary => self.link(self.primary_node(), self.secondary_node()),
            EdgeSecondary => self.link(self.secondary_node(), self.primary_node()),
            Wait => {}
        }
    }

    /// Functional form of [`apply`](Self::apply).
    pub fn step(mut self, instr: Instruction) -> Self {
        self.apply(instr);
        self
    }

    // The pointer stays where it is; the new record goes right after it.
    fn grow(&mut self, at: usize) {
        let from = self.cdll.payload(at);
        let u = self.graph.add_node();
        self.link(from, u);
        self.cdll
            .insert_after(Some(at), u)
            .expect("pointers always reference live records");
    }

    fn link(&mut self, from: usize, to: usize) {
        self.graph
            .add_edge(from, to)
            .expect("list payloads are graph nodes");
    }

    /// Circular order of payloads starting from the first record.
    pub fn circular_order(&self) -> Vec<usize> {
        self.cdll.payloads_from(0)
    }

    /// Checks every interpreter invariant.
    pub fn validate(&self) -> std::result::Result<(), String> {
        self.graph.validate()?;
        self.cdll.validate()?;
        if self.cdll.len() != self.graph.node_count() {
            return Err("list and graph sizes differ".into());
        }
        if !self.cdll.is_live(self.primary) || !self.cdll.is_live(self.secondary) {
            return Err("pointer to a dead record".into());
        }
        let mut payloads = self.circular_order();
        payloads.sort_unstable();
        if payloads != (0..self.graph.node_count()).collect::<Vec<_>>() {
            return Err("list payloads are not a bijection onto graph nodes".into());
        }
        if !self.graph.all_reachable_from(0) {
            return Err("node 0 does not reach every node".into());
        }
        Ok(())
    }
}

pub fn run(program: &[Instruction], directed: bool) -> InterpreterState {
    program
        .iter()
        .fold(InterpreterState::initial(directed), |s, &i| s.step(i))
}

/// Decodes an instruction string. Any string over the alphabet succeeds.
pub fn string_to_graph(w: &str, directed: bool) -> Result<Graph> {
    Ok(run(&parse(w)?, directed).graph)
}

/// Decodes and returns the state before any instruction and after each one.
pub fn decode_with_trace(w: &str, directed: bool) -> Result<Vec<InterpreterState>> {
    let program = parse(w)?;
    let mut state = InterpreterState::initial(directed);
    let mut trace = Vec::with_capacity(program.len() + 1);
    trace.push(state.clone());
    for i in program {
        state.apply(i);
        trace.push(state.clone());
    }
    Ok(trace)
}
