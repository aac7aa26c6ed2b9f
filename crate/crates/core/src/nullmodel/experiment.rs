use rayon::prelude::*;
use serde::Serialize;

use super::expectation::{
    expected_average_closure, expected_clustering, expected_global_closure, Expectation,
};
use super::swap::{run_swap_chain, sample_seed, SwapChainConfig, SwapStats};
use crate::closure::{all_local_closure, average_from_profiles, check_symmetry, global_from_profiles};
use crate::clustering::{all_local_clustering, mean_from_profiles};
use crate::error::{Error, Result};
use crate::graph::DirectedGraph;
use crate::keyed::{ByKey, ByType};
use crate::moments::{moments, DegreeMoments};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ExperimentConfig {
    pub samples: usize,
    /// Chain applied to every sample; its seed is the base seed.
    pub chain: SwapChainConfig,
    pub bins: usize,
}

impl ExperimentConfig {
    pub const DEFAULT_BINS: usize = 50;
}

/// Coefficients of one swap-sampled graph.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NullSample {
    pub seed: u64,
    pub average: ByKey<f64>,
    pub global: ByKey<Option<f64>>,
    pub clustering: ByType<f64>,
    pub symmetry_residual: f64,
    pub swaps: SwapStats,
}

/// Equal-width histogram; `edges.len() == counts.len() + 1`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Histogram {
    pub edges: Vec<f64>,
    pub counts: Vec<u64>,
}

impl Histogram {
    /// Bins spanning `[min, max]` of `values`; the last bin is closed. When
    /// every value is equal all bins collapse onto that value and the first
    /// one holds everything.
    pub fn build(values: &[f64], bins: usize) -> Self {
        if values.is_empty() || bins == 0 {
            return Histogram { edges: Vec::new(), counts: Vec::new() };
        }
        let lo = values.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let width = (hi - lo) / bins as f64;
        let mut edges: Vec<f64> = (0..=bins).map(|i| lo + width * i as f64).collect();
        edges[bins] = hi;
        let mut counts = vec![0u64; bins];
        for &v in values {
            let idx = if width > 0.0 { (((v - lo) / width) as usize).min(bins - 1) } else { 0 };
            counts[idx] += 1;
        }
        Histogram { edges, counts }
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }
}

/// Sampled distribution of one coefficient against its expectation and its
/// value on the input graph.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CoefficientStats {
    pub mean: Option<f64>,
    pub std: Option<f64>,
    pub theory: f64,
    pub theory_clamped: bool,
    pub empirical: Option<f64>,
    /// Samples on which the coefficient was defined.
    pub defined_samples: usize,
    pub hist: Histogram,
}

impl CoefficientStats {
    fn new(values: &[f64], theory: Expectation, empirical: Option<f64>, bins: usize) -> Self {
        let k = values.len();
        let mean = (k > 0).then(|| values.iter().sum::<f64>() / k as f64);
        let std = mean.map(|mu| {
            if k < 2 {
                0.0
            } else {
                (values.iter().map(|v| (v - mu) * (v - mu)).sum::<f64>() / (k - 1) as f64).sqrt()
            }
        });
        CoefficientStats {
            mean,
            std,
            theory: theory.value,
            theory_clamped: theory.clamped,
            empirical,
            defined_samples: k,
            hist: Histogram::build(values, bins),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NullModelReport {
    pub samples: usize,
    pub bins: usize,
    pub chain: SwapChainConfig,
    pub moments: DegreeMoments,
    pub swaps: SwapStats,
    pub acceptance_rate: f64,
    pub max_symmetry_residual: f64,
    pub average: ByKey<CoefficientStats>,
    pub global: ByKey<CoefficientStats>,
    pub clustering: ByType<CoefficientStats>,
}

/// Draws `cfg.samples` graphs, each from its own chain seeded by
/// [`sample_seed`]. Samples run in parallel; the result is in index order.
pub fn run_null_samples(g: &DirectedGraph, cfg: &ExperimentConfig) -> Result<Vec<NullSample>> {
    if cfg.samples == 0 {
        return Err(Error::InvalidArgument("samples must be at least 1".into()));
    }
    (0..cfg.samples as u64)
        .into_par_iter()
        .map(|i| {
            let seed = sample_seed(cfg.chain.seed, i);
            let chain = SwapChainConfig { seed, ..cfg.chain };
            let (h, swaps) = run_swap_chain(g, &chain)?;
            let profiles = all_local_closure(&h);
            let global = global_from_profiles(&profiles);
            Ok(NullSample {
                seed,
                average: average_from_profiles(&profiles)?,
                symmetry_residual: check_symmetry(&global).max_residual(),
                global,
                clustering: mean_from_profiles(&all_local_clustering(&h))?,
                swaps,
            })
        })
        .collect()
}

/// Aggregates swap-sampled coefficients of `g` against the leading-order
/// expectations computed from its degree moments.
pub fn run_null_experiment(g: &DirectedGraph, cfg: &ExperimentConfig) -> Result<NullModelReport> {
    if cfg.bins == 0 {
        return Err(Error::InvalidArgument("bins must be at least 1".into()));
    }
    let mom: DegreeMoments = moments(g)?;
    let samples = run_null_samples(g, cfg)?;

    let profiles = all_local_closure(g);
    let emp_avg = average_from_profiles(&profiles)?;
    let emp_glob = global_from_profiles(&profiles);
    let emp_clus = mean_from_profiles(&all_local_clustering(g))?;

    let mut swaps = SwapStats::default();
    for s in &samples {
        swaps.merge(&s.swaps);
    }
    let max_symmetry_residual = samples.iter().map(|s| s.symmetry_residual).fold(0.0, f64::max);

    let mut average = Vec::with_capacity(8);
    let mut global = Vec::with_capacity(8);
    for (k, _) in emp_avg.iter() {
        let vals: Vec<f64> = samples.iter().map(|s| s.average[k]).collect();
        average.push(CoefficientStats::new(
            &vals,
            expected_average_closure(&mom, k)?,
            Some(emp_avg[k]),
            cfg.bins,
        ));
        let vals: Vec<f64> = samples.iter().filter_map(|s| s.global[k]).collect();
        global.push(CoefficientStats::new(
            &vals,
            expected_global_closure(&mom, k)?,
            emp_glob[k],
            cfg.bins,
        ));
    }
    let mut clustering = Vec::with_capacity(4);
    for (t, _) in emp_clus.iter() {
        let vals: Vec<f64> = samples.iter().map(|s| s.clustering[t]).collect();
        clustering.push(CoefficientStats::new(
            &vals,
            expected_clustering(&mom, t)?,
            Some(emp_clus[t]),
            cfg.bins,
        ));
    }

    Ok(NullModelReport {
        samples: samples.len(),
        bins: cfg.bins,
        chain: cfg.chain,
        moments: mom,
        acceptance_rate: swaps.acceptance_rate(),
        swaps,
        max_symmetry_residual,
        average: ByKey(average.try_into().expect("8 keys")),
        global: ByKey(global.try_into().expect("8 keys")),
        clustering: ByType(clustering.try_into().expect("4 types")),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closure::closure_summary;
    use crate::direction::CoefficientKey;
    use crate::nullmodel::CountMode;

    fn ring_graph() -> DirectedGraph {
        DirectedGraph::from_edges(
            30,
            (0..30).flat_map(|u| [(u, (u + 1) % 30), (u, (u + 3) % 30), (u, (u + 7) % 30)]),
        )
        .unwrap()
    }

    #[test]
    fn histogram_counts_everything() {
        let h = Histogram::build(&[0.1, 0.2, 0.2, 0.5, 0.9], 4);
        assert_eq!(h.edges.len(), 5);
        assert_eq!(h.total(), 5);
        assert_eq!(h.edges[0], 0.1);
        assert_eq!(h.edges[4], 0.9);
        assert_eq!(*h.counts.last().unwrap(), 1);

        let flat = Histogram::build(&[0.3; 7], 3);
        assert_eq!(flat.counts, [7, 0, 0]);
        assert!(flat.edges.iter().all(|&e| e == 0.3));
    }

    #[test]
    fn single_sample_report_matches_sample() {
        let g = ring_graph();
        let cfg = ExperimentConfig {
            samples: 1,
            chain: SwapChainConfig { attempts: 500, seed: 4, count_mode: CountMode::Attempted },
            bins: 10,
        };
        let samples = run_null_samples(&g, &cfg).unwrap();
        let report = run_null_experiment(&g, &cfg).unwrap();
        assert_eq!(report.samples, 1);
        for k in CoefficientKey::ALL {
            assert_eq!(report.average[k].mean, Some(samples[0].average[k]));
            assert_eq!(report.average[k].std, Some(0.0));
            assert_eq!(report.global[k].mean, samples[0].global[k]);
        }
        let emp = closure_summary(&g).unwrap();
        for k in CoefficientKey::ALL {
            assert_eq!(report.average[k].empirical, Some(emp.average[k]));
        }
    }

    #[test]
    fn report_invariants_hold() {
        let g = ring_graph();
        let cfg = ExperimentConfig {
            samples: 12,
            chain: SwapChainConfig { attempts: 400, seed: 21, count_mode: CountMode::Attempted },
            bins: 7,
        };
        let report = run_null_experiment(&g, &cfg).unwrap();
        assert!(report.max_symmetry_residual <= 1e-12);
        assert_eq!(report.swaps.attempts, 12 * 400);
        for (_, s) in report.average.iter().chain(report.global.iter()) {
            assert_eq!(s.hist.total() as usize, s.defined_samples);
            if let Some(mu) = s.mean {
                assert!(mu >= s.hist.edges[0] - 1e-15);
                assert!(mu <= *s.hist.edges.last().unwrap() + 1e-15);
            }
        }
        let again = run_null_experiment(&g, &cfg).unwrap();
        assert_eq!(report, again);
    }

    #[test]
    fn zero_samples_or_bins_rejected() {
        let g = ring_graph();
        let chain = SwapChainConfig { attempts: 1, seed: 0, count_mode: CountMode::Attempted };
        assert!(run_null_experiment(&g, &ExperimentConfig { samples: 0, chain, bins: 5 }).is_err());
        assert!(run_null_experiment(&g, &ExperimentConfig { samples: 1, chain, bins: 0 }).is_err());
    }
}
