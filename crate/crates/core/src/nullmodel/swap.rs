use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::DirectedGraph;

/// Result of one proposed swap.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum SwapOutcome {
    Swapped,
    RejectedSelfLoop,
    RejectedMultiEdge,
    RejectedSameEdge,
}

/// Whether `attempts` counts proposals or applied swaps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CountMode {
    #[default]
    Attempted,
    Accepted,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SwapChainConfig {
    pub attempts: u64,
    pub seed: u64,
    pub count_mode: CountMode,
}

impl SwapChainConfig {
    /// Attempts used when none are given: `max(20 m, 10000)`.
    pub fn default_attempts(edge_count: usize) -> u64 {
        (20 * edge_count as u64).max(10_000)
    }

    /// Default chain for `g`: [`SwapChainConfig::default_attempts`] attempted swaps.
    pub fn for_graph(g: &DirectedGraph, seed: u64) -> Self {
        SwapChainConfig {
            attempts: Self::default_attempts(g.edge_count()),
            seed,
            count_mode: CountMode::Attempted,
        }
    }
}

/// Tallies of a swap chain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct SwapStats {
    pub attempts: u64,
    pub swapped: u64,
    pub rejected_self_loop: u64,
    pub rejected_multi_edge: u64,
    pub rejected_same_edge: u64,
}

impl SwapStats {
    fn record(&mut self, outcome: SwapOutcome) {
        self.attempts += 1;
        match outcome {
            SwapOutcome::Swapped => self.swapped += 1,
            SwapOutcome::RejectedSelfLoop => self.rejected_self_loop += 1,
            SwapOutcome::RejectedMultiEdge => self.rejected_multi_edge += 1,
            SwapOutcome::RejectedSameEdge => self.rejected_same_edge += 1,
        }
    }

    pub fn merge(&mut self, other: &SwapStats) {
        self.attempts += other.attempts;
        self.swapped += other.swapped;
        self.rejected_self_loop += other.rejected_self_loop;
        self.rejected_multi_edge += other.rejected_multi_edge;
        self.rejected_same_edge += other.rejected_same_edge;
    }

    pub fn acceptance_rate(&self) -> f64 {
        if self.attempts == 0 {
            0.0
        } else {
            self.swapped as f64 / self.attempts as f64
        }
    }
}

#[inline]
fn edge_key(u: u32, v: u32) -> u64 {
    (u64::from(u) << 32) | u64::from(v)
}

/// Mutable edge-array view of a graph for running swap chains.
///
/// Edge slots keep a fixed order so that a seeded chain is reproducible.
#[derive(Debug, Clone)]
pub struct SwapGraph {
    n: usize,
    edges: Vec<(u32, u32)>,
    present: HashSet<u64>,
    tokens: Option<Vec<String>>,
}

impl SwapGraph {
    pub fn new(g: &DirectedGraph) -> Self {
        let edges: Vec<(u32, u32)> = g.edges().map(|(u, v)| (u as u32, v as u32)).collect();
        let present = edges.iter().map(|&(u, v)| edge_key(u, v)).collect();
        SwapGraph { n: g.node_count(), edges, present, tokens: g.tokens().map(<[String]>::to_vec) }
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edge in slot `i`.
    pub fn edge(&self, i: usize) -> (usize, usize) {
        let (u, v) = self.edges[i];
        (u as usize, v as usize)
    }

    /// Slot holding `u -> v`, if present.
    pub fn slot_of(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.iter().position(|&e| e == (u as u32, v as u32))
    }

    /// Proposes replacing the edges in slots `i` and `j`, `a -> b` and
    /// `c -> d`, with `a -> d` and `c -> b`, and applies it if the result is
    /// still simple.
    pub fn try_swap(&mut self, i: usize, j: usize) -> SwapOutcome {
        if i == j {
            return SwapOutcome::RejectedSameEdge;
        }
        let (a, b) = self.edges[i];
        let (c, d) = self.edges[j];
        if a == d || c == b {
            return SwapOutcome::RejectedSelfLoop;
        }
        if self.present.contains(&edge_key(a, d)) || self.present.contains(&edge_key(c, b)) {
            return SwapOutcome::RejectedMultiEdge;
        }
        self.present.remove(&edge_key(a, b));
        self.present.remove(&edge_key(c, d));
        self.present.insert(edge_key(a, d));
        self.present.insert(edge_key(c, b));
        self.edges[i] = (a, d);
        self.edges[j] = (c, b);
        SwapOutcome::Swapped
    }

    /// One swap proposal on two uniformly drawn edge slots.
    pub fn double_edge_swap<R: Rng + ?Sized>(&mut self, rng: &mut R) -> Result<SwapOutcome> {
        let m = self.edges.len();
        if m < 2 {
            return Err(Error::TooFewEdges(m));
        }
        let i = rng.random_range(0..m);
        let j = rng.random_range(0..m);
        Ok(self.try_swap(i, j))
    }

    pub fn to_graph(&self) -> DirectedGraph {
        let g = DirectedGraph::from_edges(
            self.n,
            self.edges.iter().map(|&(u, v)| (u as usize, v as usize)),
        )
        .expect("swap chain keeps node ids in range");
        match &self.tokens {
            Some(t) => g.with_tokens(t.clone()).expect("token count unchanged"),
            None => g,
        }
    }
}

/// Runs the chain described by `cfg` on a copy of `g`.
///
/// In [`CountMode::Accepted`] the chain gives up with [`Error::SwapStall`]
/// after `max(1000 · attempts, 10⁶)` proposals.
pub fn run_swap_chain(g: &DirectedGraph, cfg: &SwapChainConfig) -> Result<(DirectedGraph, SwapStats)> {
    if g.edge_count() < 2 {
        return Err(Error::TooFewEdges(g.edge_count()));
    }
    let mut state = SwapGraph::new(g);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut stats = SwapStats::default();
    match cfg.count_mode {
        CountMode::Attempted => {
            for _ in 0..cfg.attempts {
                stats.record(state.double_edge_swap(&mut rng)?);
            }
        }
        CountMode::Accepted => {
            let cap = cfg.attempts.saturating_mul(1000).max(1_000_000);
            while stats.swapped < cfg.attempts {
                if stats.attempts >= cap {
                    return Err(Error::SwapStall {
                        accepted: stats.swapped,
                        target: cfg.attempts,
                        attempts: stats.attempts,
                    });
                }
                stats.record(state.double_edge_swap(&mut rng)?);
            }
        }
    }
    Ok((state.to_graph(), stats))
}

/// A graph with the joint degree sequence of `g`, drawn by a seeded swap chain.
pub fn sample_configuration_model(g: &DirectedGraph, cfg: &SwapChainConfig) -> Result<DirectedGraph> {
    run_swap_chain(g, cfg).map(|(h, _)| h)
}

fn splitmix64(x: u64) -> u64 {
    let mut z = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Seed of sample `index` in an experiment with base seed `seed`:
/// `splitmix64(seed ^ splitmix64(index))`.
pub fn sample_seed(seed: u64, index: u64) -> u64 {
    splitmix64(seed ^ splitmix64(index))
}
