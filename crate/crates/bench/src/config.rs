use std::time::Duration;

use graphstring_core::{derive_seed, generate, Family, Graph, GraphSpec, Prng};

use crate::error::{BenchError, Result};
use crate::method::Method;

pub const DEFAULT_SEED: u64 = 42;
pub const DEFAULT_REPEATS: usize = 5;
pub const DEFAULT_TIMEOUT: Duration = Duration::from_secs(60);

#[derive(Debug, Clone)]
pub struct NamedGraph {
    pub name: String,
    pub graph: Graph,
}

impl NamedGraph {
    pub fn new(name: impl Into<String>, graph: Graph) -> Self {
        Self {
            name: name.into(),
            graph,
        }
    }
}

#[derive(Debug, Clone)]
pub struct ExperimentConfig {
    pub corpus: Vec<NamedGraph>,
    pub methods: Vec<Method>,
    pub seed: u64,
    /// Wall-clock limit for one encoding.
    pub timeout: Duration,
    /// Timing repetitions per instance.
    pub repeats: usize,
    /// Worker threads for pairwise distances.
    pub jobs: usize,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            corpus: Vec::new(),
            methods: Method::ALL.to_vec(),
            seed: DEFAULT_SEED,
            timeout: DEFAULT_TIMEOUT,
            repeats: DEFAULT_REPEATS,
            jobs: 1,
        }
    }
}

impl ExperimentConfig {
    pub fn validate(&self) -> Result<()> {
        if self.repeats == 0 {
            return Err(BenchError::Config("repeats must be at least 1".into()));
        }
        if self.timeout.is_zero() {
            return Err(BenchError::Config("timeout must be positive".into()));
        }
        if self.jobs == 0 {
            return Err(BenchError::Config("jobs must be at least 1".into()));
        }
        if self.methods.is_empty() {
            return Err(BenchError::Config("no methods selected".into()));
        }
        Ok(())
    }
}

/// `family-n` plus the parameter and seed for random families.
pub fn spec_name(spec: &GraphSpec) -> String {
    match spec.family {
        Family::BarabasiAlbert | Family::ErdosRenyi => {
            format!("{}-{}-p{}-s{}", spec.family, spec.n, spec.param, spec.seed)
        }
        Family::RandomTree => format!("{}-{}-s{}", spec.family, spec.n, spec.seed),
        Family::Petersen | Family::House => spec.family.to_string(),
        _ => format!("{}-{}", spec.family, spec.n),
    }
}

pub fn generated_corpus(specs: &[GraphSpec]) -> Result<Vec<NamedGraph>> {
    specs
        .iter()
        .map(|s| Ok(NamedGraph::new(spec_name(s), generate(s)?)))
        .collect()
}

/// `count` sparse random graphs with `min_n..=max_n` nodes, cycling through
/// random trees, Barabási-Albert with `m = 1` and Erdős-Rényi with `p = 0.3`.
pub fn sparse_random_corpus(
    count: usize,
    min_n: usize,
    max_n: usize,
    seed: u64,
) -> Result<Vec<NamedGraph>> {
    if min_n == 0 || min_n > max_n {
        return Err(BenchError::Config(format!(
            "bad size range {min_n}..={max_n}"
        )));
    }
    let mut rng = Prng::new(seed);
    let specs: Vec<GraphSpec> = (0..count)
        .map(|i| {
            let n = min_n + rng.index(max_n - min_n + 1);
            let spec = match i % 3 {
                0 => GraphSpec::new(Family::RandomTree, n),
                1 => GraphSpec::new(Family::BarabasiAlbert, n.max(2)).with_param(1.0),
                _ => GraphSpec::new(Family::ErdosRenyi, n).with_param(0.3),
            };
            spec.with_seed(derive_seed(seed, i as u64))
        })
        .collect();
    generated_corpus(&specs)
}
