use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use graphstring_core::{
    canonical_string_with, graph_to_string_greedy_min, graph_to_string_greedy_rnd,
    CanonicalOptions, Graph,
};
use serde::{Deserialize, Serialize};

use crate::error::{BenchError, Result};

/// The three ways of turning a graph into a string.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Canonical,
    GreedyMin,
    GreedyRnd,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Canonical, Method::GreedyMin, Method::GreedyRnd];

    pub fn name(self) -> &'static str {
        match self {
            Method::Canonical => "canonical",
            Method::GreedyMin => "greedy_min",
            Method::GreedyRnd => "greedy_rnd",
        }
    }

    /// Encodes `g`. `seed` picks the start for `GreedyRnd`; `deadline` only
    /// bounds the canonical search.
    pub fn encode(
        self,
        g: &Graph,
        seed: u64,
        deadline: Option<Instant>,
    ) -> graphstring_core::Result<String> {
        match self {
            Method::Canonical => {
                let opts = CanonicalOptions {
                    deadline,
                    ..CanonicalOptions::default()
                };
                Ok(canonical_string_with(g, &opts)?.w_star)
            }
            Method::GreedyMin => Ok(graph_to_string_greedy_min(g)?.string),
            Method::GreedyRnd => Ok(graph_to_string_greedy_rnd(g, seed)?.string),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = BenchError;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.replace('-', "_");
        Method::ALL
            .into_iter()
            .find(|m| m.name() == norm)
            .ok_or_else(|| BenchError::Config(format!("unknown method '{s}'")))
    }
}
