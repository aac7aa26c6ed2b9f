//! Brute-force reference counts that never touch the adjacency arrays.
//!
//! Wedges are enumerated over all ordered pairs of edges, closures and
//! clustering over all node triples, using only a plain edge set.

#![allow(dead_code)]

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use triclose::{CoefficientKey, Direction, DirectedGraph, WedgeType};

pub struct Oracle {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    set: HashSet<(usize, usize)>,
}

/// Per-node counts; wedge types indexed `ii, io, oi, oo`, keys canonical.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BruteCounts {
    pub wedges: [u64; 4],
    pub closed: [u64; 8],
}

fn type_index(x: Direction, y: Direction) -> usize {
    WedgeType::new(x, y).index()
}

impl Oracle {
    pub fn new(g: &DirectedGraph) -> Self {
        let edges: Vec<(usize, usize)> = g.edges().collect();
        let set = edges.iter().copied().collect();
        Oracle { n: g.node_count(), edges, set }
    }

    pub fn has(&self, u: usize, v: usize) -> bool {
        self.set.contains(&(u, v))
    }

    /// Head-based counts for every node from all ordered edge pairs.
    pub fn closure_counts(&self) -> Vec<BruteCounts> {
        let mut out = vec![BruteCounts::default(); self.n];
        for (i, &(a, b)) in self.edges.iter().enumerate() {
            for (j, &(c, d)) in self.edges.iter().enumerate() {
                if i == j {
                    continue;
                }
                let first: HashSet<usize> = [a, b].into();
                let second: HashSet<usize> = [c, d].into();
                let shared: Vec<usize> = first.intersection(&second).copied().collect();
                if shared.len() != 1 {
                    continue;
                }
                let center = shared[0];
                let head = if a == center { b } else { a };
                let tail = if c == center { d } else { c };
                // first edge relative to the head, second relative to the center
                let x = if a == head { Direction::Out } else { Direction::In };
                let y = if c == center { Direction::Out } else { Direction::In };
                let t = type_index(x, y);
                out[head].wedges[t] += 1;
                if self.has(tail, head) {
                    out[head].closed[CoefficientKey::new(x, y, Direction::In).index()] += 1;
                }
                if self.has(head, tail) {
                    out[head].closed[CoefficientKey::new(x, y, Direction::Out).index()] += 1;
                }
            }
        }
        out
    }

    fn linked(&self, u: usize, v: usize, d: Direction) -> bool {
        match d {
            Direction::Out => self.has(u, v),
            Direction::In => self.has(v, u),
        }
    }

    /// Center-based `(D_xy(u), T_xy(u))` for all four types by a double loop
    /// over candidate end nodes.
    pub fn clustering_counts(&self, u: usize) -> ([u64; 4], [u64; 4]) {
        let (mut den, mut closed) = ([0u64; 4], [0u64; 4]);
        for t in WedgeType::ALL {
            for v in 0..self.n {
                for w in 0..self.n {
                    if v == w || v == u || w == u {
                        continue;
                    }
                    if self.linked(u, v, t.first) && self.linked(u, w, t.second) {
                        den[t.index()] += 1;
                        if self.has(w, v) {
                            closed[t.index()] += 1;
                        }
                    }
                }
            }
        }
        (den, closed)
    }

    pub fn reciprocal_degree(&self, u: usize) -> usize {
        (0..self.n).filter(|&v| self.has(u, v) && self.has(v, u)).count()
    }

    pub fn degree(&self, u: usize, d: Direction) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| match d {
                Direction::Out => a == u,
                Direction::In => b == u,
            })
            .count()
    }
}

/// `G(n, p)` digraph drawn from an independent generator.
pub fn random_digraph(rng: &mut ChaCha8Rng, max_n: usize) -> DirectedGraph {
    let n = rng.random_range(1..=max_n);
    let p = rng.random_range(0.05..0.6);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    DirectedGraph::from_edges(n, edges).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
