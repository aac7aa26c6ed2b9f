//! Four-class construction whose average `io` closure coefficients can be
//! pushed far apart.
//!
//! Classes `C1..C4` hold `n1..n4` nodes with no edges inside a class and
//! complete blocks `C3 -> C4`, `C3 -> C2`, `C2 -> C1`, `C3 -> C1`.
//!
//! The usual closed forms for the `io` averages count, for a head in
//! `C1`, `n3 n2 + n3 n4` wedges. Exact enumeration also admits tails in the
//! head's own class (through a center in `C2` or `C3`), so the closed forms
//! agree with computed values only when every class has one node. Both are
//! reported; neither replaces the other.

use std::io::Write;

use serde::Serialize;

use crate::closure::average_closure;
use crate::direction::{CoefficientKey, Direction};
use crate::error::{Error, Result};
use crate::graph::DirectedGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ExtremalSpec {
    pub n1: usize,
    pub n2: usize,
    pub n3: usize,
    pub n4: usize,
}

impl ExtremalSpec {
    pub fn new(n1: usize, n2: usize, n3: usize, n4: usize) -> Result<Self> {
        if [n1, n2, n3, n4].contains(&0) {
            return Err(Error::InvalidArgument("every class needs at least one node".into()));
        }
        Ok(ExtremalSpec { n1, n2, n3, n4 })
    }

    pub fn sizes(&self) -> [usize; 4] {
        [self.n1, self.n2, self.n3, self.n4]
    }

    pub fn node_count(&self) -> usize {
        self.sizes().iter().sum()
    }

    /// `n3 n4 + n3 n2 + n2 n1 + n3 n1`.
    pub fn edge_count(&self) -> usize {
        self.n3 * self.n4 + self.n3 * self.n2 + self.n2 * self.n1 + self.n3 * self.n1
    }

    /// Class (1..=4) of every node id, in id order.
    pub fn classes(&self) -> Vec<u8> {
        self.sizes()
            .iter()
            .enumerate()
            .flat_map(|(c, &k)| std::iter::repeat_n(c as u8 + 1, k))
            .collect()
    }
}

/// Generated graph with per-node class membership.
#[derive(Debug, Clone)]
pub struct ExtremalGraph {
    pub spec: ExtremalSpec,
    pub graph: DirectedGraph,
    pub classes: Vec<u8>,
}

impl ExtremalGraph {
    /// Writes `token,class` as CSV with a header.
    pub fn write_classes<W: Write>(&self, w: W) -> Result<()> {
        let mut out = csv::Writer::from_writer(w);
        out.write_record(["token", "class"])?;
        for (u, c) in self.classes.iter().enumerate() {
            out.write_record([self.graph.token(u).into_owned(), format!("C{c}")])?;
        }
        out.flush()?;
        Ok(())
    }
}

/// Builds the construction. Node ids run through `C1`, `C2`, `C3`, `C4` in
/// order and carry tokens such as `c3_0`.
pub fn build_extremal(spec: ExtremalSpec) -> Result<ExtremalGraph> {
    let sizes = spec.sizes();
    let mut start = [0usize; 4];
    for c in 1..4 {
        start[c] = start[c - 1] + sizes[c - 1];
    }
    let class = |c: usize| start[c - 1]..start[c - 1] + sizes[c - 1];
    let mut edges = Vec::with_capacity(spec.edge_count());
    for (from, to) in [(3, 4), (3, 2), (2, 1), (3, 1)] {
        for u in class(from) {
            edges.extend(class(to).map(|v| (u, v)));
        }
    }
    let tokens = sizes
        .iter()
        .enumerate()
        .flat_map(|(c, &k)| (0..k).map(move |i| format!("c{}_{}", c + 1, i)))
        .collect();
    let graph = DirectedGraph::from_edges(spec.node_count(), edges)?.with_tokens(tokens)?;
    Ok(ExtremalGraph { spec, classes: spec.classes(), graph })
}

/// Closed forms `(H̄_io^i, H̄_io^o)`:
/// `n1 n2 / ((n2 + n4) N)` and `n1 n2 / ((n1 + n4) N)`, `N = Σ n_j`.
pub fn claimed_io_averages(spec: ExtremalSpec) -> (f64, f64) {
    let total = spec.node_count() as f64;
    let num = (spec.n1 * spec.n2) as f64;
    (
        num / ((spec.n2 + spec.n4) as f64 * total),
        num / ((spec.n1 + spec.n4) as f64 * total),
    )
}

/// Claimed versus computed `io` averages for one spec.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ExtremalComparison {
    pub spec: ExtremalSpec,
    pub claimed_io_i: f64,
    pub claimed_io_o: f64,
    pub computed_io_i: f64,
    pub computed_io_o: f64,
}

impl ExtremalComparison {
    /// Whether both claimed values equal the computed ones within `tol`.
    pub fn agrees(&self, tol: f64) -> bool {
        (self.claimed_io_i - self.computed_io_i).abs() <= tol
            && (self.claimed_io_o - self.computed_io_o).abs() <= tol
    }
}

pub fn compare_extremal(spec: ExtremalSpec) -> Result<ExtremalComparison> {
    let built = build_extremal(spec)?;
    let avg = average_closure(&built.graph)?;
    let (claimed_io_i, claimed_io_o) = claimed_io_averages(spec);
    use Direction::{In, Out};
    Ok(ExtremalComparison {
        spec,
        claimed_io_i,
        claimed_io_o,
        computed_io_i: avg[CoefficientKey::new(In, Out, In)],
        computed_io_o: avg[CoefficientKey::new(In, Out, Out)],
    })
}
