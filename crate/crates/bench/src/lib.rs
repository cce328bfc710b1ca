//! Experiment harness: distance correlation against exact edit distance,
//! encoding-time scaling, and single-edit neighbourhoods.

pub mod config;
pub mod correlation;
pub mod error;
pub mod method;
pub mod neighborhood;
pub mod output;
pub mod scaling;

pub use config::{
    generated_corpus, sparse_random_corpus, spec_name, ExperimentConfig, NamedGraph,
    DEFAULT_REPEATS, DEFAULT_SEED, DEFAULT_TIMEOUT,
};
pub use correlation::{run_correlation, Correlation, CorrelationRun, DistanceReport, PairRow};
pub use error::{BenchError, Result};
pub use method::Method;
pub use neighborhood::{run_neighborhood, EditRow, NeighborhoodReport, StringRow};
pub use output::{
    read_pairs_csv, write_histogram_csv, write_neighborhood_csv, write_pairs_csv,
    write_scaling_csv, CorrelationSummary, ScalingSummary, Summary,
};
pub use scaling::{
    fit_power_law, median_iqr, run_scaling, scaling_instance, MethodScaling, PowerFit,
    ScalingConfig, ScalingMethod, ScalingReport, ScalingRow,
};
