//! Center-based local directed clustering coefficients.
//!
//! For center `u` and type `xy`, a wedge `(v, u, w)` uses an edge between `u`
//! and `v` with direction `x` relative to `u` and an edge between `u` and `w`
//! with direction `y` relative to `u`, with `v != w`. It is closed when
//! `w -> v` exists, so that seen from `v` it is an i-closed `x̄y`-wedge.
//!
//! ```text
//! D_xx(u) = d_x(u) (d_x(u) - 1)
//! D_xy(u) = d_x(u) d_y(u) - r(u)          (x != y)
//! T_xy(u) = Σ_{v ∈ N(u,x)} |N(v,i) ∩ N(u,y)|
//! ```

use rayon::prelude::*;
use serde::Serialize;

use crate::direction::{Direction, WedgeType};
use crate::error::{Error, Result};
use crate::graph::{sorted_intersection_len, DirectedGraph};
use crate::keyed::ByType;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct NodeClusteringProfile {
    pub denominators: ByType<u64>,
    pub closed: ByType<u64>,
}

impl NodeClusteringProfile {
    /// `C_xy(u)`, or `None` when there is no wedge of that type at `u`.
    pub fn coefficient(&self, t: WedgeType) -> Option<f64> {
        let d = self.denominators[t];
        (d > 0).then(|| self.closed[t] as f64 / d as f64)
    }

    pub fn coefficients(&self) -> ByType<Option<f64>> {
        ByType::from_fn(|t| self.coefficient(t))
    }
}

fn profile_at(g: &DirectedGraph, u: usize) -> NodeClusteringProfile {
    let recip = g.recip(u) as u64;
    let denominators = ByType::from_fn(|t| {
        let (a, b) = (g.deg(u, t.first) as u64, g.deg(u, t.second) as u64);
        if t.first == t.second {
            a * a.saturating_sub(1)
        } else {
            a * b - recip
        }
    });
    let closed = ByType::from_fn(|t| {
        let ends = g.neighbors(u, t.second);
        if ends.is_empty() {
            return 0;
        }
        g.neighbors(u, t.first)
            .iter()
            .map(|&v| sorted_intersection_len(g.neighbors(v as usize, Direction::In), ends) as u64)
            .sum()
    });
    NodeClusteringProfile { denominators, closed }
}

/// Clustering profile of center `u`.
pub fn local_clustering(g: &DirectedGraph, u: usize) -> Result<NodeClusteringProfile> {
    if u >= g.node_count() {
        return Err(Error::NodeOutOfRange { node: u, n: g.node_count() });
    }
    Ok(profile_at(g, u))
}

pub fn all_local_clustering(g: &DirectedGraph) -> Vec<NodeClusteringProfile> {
    (0..g.node_count()).into_par_iter().map(|u| profile_at(g, u)).collect()
}

pub fn mean_from_profiles(profiles: &[NodeClusteringProfile]) -> Result<ByType<f64>> {
    if profiles.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let n = profiles.len() as f64;
    Ok(ByType::from_fn(|t| {
        profiles.iter().map(|p| p.coefficient(t).unwrap_or(0.0)).sum::<f64>() / n
    }))
}

/// Node-mean of each `C_xy`, undefined values counted as 0.
pub fn mean_clustering(g: &DirectedGraph) -> Result<ByType<f64>> {
    mean_from_profiles(&all_local_clustering(g))
}
