//! Encoding time as a function of graph size, with a power-law fit
//! `T(n) = c * n^alpha` on log-log axes.
//!
//! Times are CPU time of the measuring thread. Encoders are single-threaded,
//! so this is the process CPU spent on the encoding, unaffected by anything
//! else running in the same process. Calls shorter than the batch floor are
//! repeated back to back and averaged.

use std::time::{Duration, Instant};

use cpu_time::ThreadTime;
use graphstring_core::{
    canonical_string_with, derive_seed, generate, ols_fit, CanonicalOptions, Error, Family, Graph,
    GraphSpec, Prng,
};

use crate::config::{DEFAULT_REPEATS, DEFAULT_SEED, DEFAULT_TIMEOUT};
use crate::error::{BenchError, Result};
use crate::method::Method;

type EncodeFn = dyn Fn(&Graph, u64, Option<Instant>) -> graphstring_core::Result<()> + Sync;

/// A timed encoder and the sizes it runs at.
pub struct ScalingMethod {
    pub name: String,
    pub sizes: Vec<usize>,
    run: Box<EncodeFn>,
}

impl ScalingMethod {
    /// Canonical search runs without a node budget so only the timeout
    /// limits it.
    pub fn builtin(method: Method, sizes: Vec<usize>) -> Self {
        Self::custom(
            method.name(),
            sizes,
            move |g, seed, deadline| match method {
                Method::Canonical => {
                    let opts = CanonicalOptions {
                        budget: None,
                        deadline,
                        ..CanonicalOptions::default()
                    };
                    canonical_string_with(g, &opts).map(drop)
                }
                _ => method.encode(g, seed, deadline).map(drop),
            },
        )
    }

    pub fn custom(
        name: impl Into<String>,
        sizes: Vec<usize>,
        run: impl Fn(&Graph, u64, Option<Instant>) -> graphstring_core::Result<()> + Sync + 'static,
    ) -> Self {
        Self {
            name: name.into(),
            sizes,
            run: Box::new(run),
        }
    }
}

impl std::fmt::Debug for ScalingMethod {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ScalingMethod")
            .field("name", &self.name)
            .field("sizes", &self.sizes)
            .finish_non_exhaustive()
    }
}

#[derive(Debug)]
pub struct ScalingConfig {
    /// `(family, param)` pairs; every instance of a family shares the param.
    pub families: Vec<(Family, f64)>,
    pub methods: Vec<ScalingMethod>,
    pub instances: usize,
    pub repeats: usize,
    pub timeout: Duration,
    pub seed: u64,
    /// Minimum CPU time per measurement; faster calls are batched.
    pub min_batch: Duration,
    /// A first repeat at least this slow is not repeated.
    pub slow_cutoff: Duration,
}

impl Default for ScalingConfig {
    fn default() -> Self {
        Self {
            families: vec![
                (Family::BarabasiAlbert, 1.0),
                (Family::BarabasiAlbert, 2.0),
                (Family::ErdosRenyi, 0.3),
                (Family::ErdosRenyi, 0.5),
            ],
            methods: vec![
                ScalingMethod::builtin(Method::GreedyRnd, (3..=30).collect()),
                ScalingMethod::builtin(Method::GreedyMin, (3..=30).collect()),
                ScalingMethod::builtin(Method::Canonical, (3..=12).collect()),
            ],
            instances: 5,
            repeats: DEFAULT_REPEATS,
            timeout: DEFAULT_TIMEOUT,
            seed: DEFAULT_SEED,
            min_batch: Duration::from_millis(5),
            slow_cutoff: Duration::from_secs(1),
        }
    }
}

/// One `(method, family, n)` cell: median and interquartile range over the
/// per-instance medians.
#[derive(Debug, Clone, PartialEq)]
pub struct ScalingRow {
    pub method: String,
    pub family: Family,
    pub param: f64,
    pub n: usize,
    pub instances: usize,
    pub median_seconds: f64,
    pub iqr_seconds: f64,
    /// Some instance hit the timeout; the row is left out of the fit.
    pub timed_out: bool,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerFit {
    pub alpha: f64,
    pub r2: f64,
    pub points: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MethodScaling {
    pub method: String,
    pub fit: Option<PowerFit>,
    /// Smallest `n` at which some instance timed out.
    pub first_timeout: Option<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScalingReport {
    pub rows: Vec<ScalingRow>,
    pub methods: Vec<MethodScaling>,
}

impl ScalingReport {
    pub fn method(&self, name: &str) -> Option<&MethodScaling> {
        self.methods.iter().find(|m| m.method == name)
    }
}

/// Least-squares fit of `ln t = ln c + alpha ln n`.
pub fn fit_power_law(points: &[(f64, f64)]) -> Result<PowerFit> {
    if points.iter().any(|&(n, t)| n <= 0.0 || t <= 0.0) {
        return Err(BenchError::Config(
            "power-law fit needs positive sizes and times".into(),
        ));
    }
    let logs: Vec<(f64, f64)> = points.iter().map(|&(n, t)| (n.ln(), t.ln())).collect();
    let fit = ols_fit(&logs)?;
    Ok(PowerFit {
        alpha: fit.slope,
        r2: fit.r2,
        points: points.len(),
    })
}

/// Median and interquartile range with linear interpolation.
pub fn median_iqr(values: &[f64]) -> (f64, f64) {
    let mut v = values.to_vec();
    v.sort_by(f64::total_cmp);
    let q = |p: f64| {
        let pos = p * (v.len() - 1) as f64;
        let (lo, hi) = (pos.floor() as usize, pos.ceil() as usize);
        v[lo] + (v[hi] - v[lo]) * (pos - lo as f64)
    };
    (q(0.5), q(0.75) - q(0.25))
}

/// CPU seconds per call, or `None` on timeout. Calls are batched until
/// the batch reaches `min_batch`.
fn measure_once(
    method: &ScalingMethod,
    g: &Graph,
    seed: u64,
    cfg: &ScalingConfig,
) -> Result<Option<f64>> {
    let wall = Instant::now();
    let deadline = wall + cfg.timeout;
    let cpu = ThreadTime::now();
    let mut calls = 0u32;
    loop {
        match (method.run)(g, seed, Some(deadline)) {
            Ok(()) => {}
            Err(Error::DeadlineExceeded { .. }) => return Ok(None),
            Err(e) => return Err(e.into()),
        }
        calls += 1;
        if wall.elapsed() > cfg.timeout {
            return Ok(None);
        }
        if cpu.elapsed() >= cfg.min_batch {
            return Ok(Some(cpu.elapsed().as_secs_f64() / f64::from(calls)));
        }
    }
}

/// Instance `k` of `family` at size `n`; identical across methods.
pub fn scaling_instance(
    seed: u64,
    family: Family,
    param: f64,
    n: usize,
    k: usize,
) -> Result<Graph> {
    let stream = derive_seed(
        seed,
        family as u64 * 1_000_003 + param.to_bits() % 1_000_003,
    );
    let spec = GraphSpec::new(family, n)
        .with_param(param)
        .with_seed(derive_seed(stream, (n * 1_000 + k) as u64));
    Ok(generate(&spec)?)
}

/// Times every method on every family over its sizes.
///
/// The first repeat walks sizes in ascending order and stops a family at its
/// first timeout. Later repeats visit the remaining sizes in a seeded random
/// order, so slow drift in machine speed does not correlate with `n`.
pub fn run_scaling(cfg: &ScalingConfig) -> Result<ScalingReport> {
    if cfg.repeats == 0 || cfg.instances == 0 || cfg.timeout.is_zero() {
        return Err(BenchError::Config(
            "repeats, instances and timeout must be positive".into(),
        ));
    }
    let mut rng = Prng::new(derive_seed(cfg.seed, 0x5ca1e));
    let mut rows = Vec::new();
    let mut methods = Vec::new();
    for method in &cfg.methods {
        let mut first_timeout: Option<usize> = None;
        for &(family, param) in &cfg.families {
            let graphs = method
                .sizes
                .iter()
                .map(|&n| {
                    (0..cfg.instances)
                        .map(|k| scaling_instance(cfg.seed, family, param, n, k))
                        .collect()
                })
                .collect::<Result<Vec<Vec<Graph>>>>()?;
            let mut samples = vec![vec![Vec::<f64>::new(); cfg.instances]; graphs.len()];
            let mut timed_out = vec![false; graphs.len()];
            let mut reached = graphs.len();

            'sizes: for (si, instances) in graphs.iter().enumerate() {
                for (k, g) in instances.iter().enumerate() {
                    match measure_once(method, g, derive_seed(cfg.seed, k as u64), cfg)? {
                        Some(t) => samples[si][k].push(t),
                        None => {
                            timed_out[si] = true;
                            reached = si + 1;
                            break 'sizes;
                        }
                    }
                }
            }
            let slow = cfg.slow_cutoff.as_secs_f64();
            for _ in 1..cfg.repeats {
                for si in rng.permutation(reached) {
                    if timed_out[si] {
                        continue;
                    }
                    for (k, g) in graphs[si].iter().enumerate() {
                        if samples[si][k][0] >= slow {
                            continue;
                        }
                        match measure_once(method, g, derive_seed(cfg.seed, k as u64), cfg)? {
                            Some(t) => samples[si][k].push(t),
                            None => {
                                timed_out[si] = true;
                                break;
                            }
                        }
                    }
                }
            }

            for si in 0..reached {
                let n = method.sizes[si];
                let medians: Vec<f64> = samples[si]
                    .iter()
                    .filter(|s| !s.is_empty())
                    .map(|s| median_iqr(s).0)
                    .collect();
                let (median_seconds, iqr_seconds) = if medians.is_empty() {
                    (f64::NAN, f64::NAN)
                } else {
                    median_iqr(&medians)
                };
                rows.push(ScalingRow {
                    method: method.name.clone(),
                    family,
                    param,
                    n,
                    instances: medians.len(),
                    median_seconds,
                    iqr_seconds,
                    timed_out: timed_out[si],
                });
                if timed_out[si] {
                    first_timeout = Some(first_timeout.map_or(n, |f| f.min(n)));
                }
            }
        }
        let points: Vec<(f64, f64)> = rows
            .iter()
            .filter(|r| r.method == method.name && !r.timed_out)
            .map(|r| (r.n as f64, r.median_seconds))
            .collect();
        methods.push(MethodScaling {
            method: method.name.clone(),
            fit: fit_power_law(&points).ok(),
            first_timeout,
        });
    }
    Ok(ScalingReport { rows, methods })
}
