//! Directed configuration model: leading-order expectations of the closure
//! and clustering coefficients, a degree-preserving double-edge-swap
//! sampler, and sampling experiments that compare the two.

mod expectation;
mod experiment;
mod swap;

pub use expectation::{
    expected_average_closure, expected_clustering, expected_global_closure,
    expected_local_closure, Expectation,
};
pub use experiment::{
    run_null_experiment, run_null_samples, CoefficientStats, ExperimentConfig, Histogram,
    NullModelReport, NullSample,
};
pub use swap::{
    run_swap_chain, sample_configuration_model, sample_seed, CountMode, SwapChainConfig,
    SwapGraph, SwapOutcome, SwapStats,
};
