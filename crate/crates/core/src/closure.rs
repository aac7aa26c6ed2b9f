//! Head-based directed closure coefficients.
//!
//! A wedge `(u, v, w)` is an ordered pair of edges sharing exactly one node,
//! the center `v`; `u` is the head and `w` the tail. Its type `xy` gives the
//! direction of the `u`–`v` edge relative to `u` and of the `v`–`w` edge
//! relative to `v`. It is `i`-closed when `w -> u` exists and `o`-closed when
//! `u -> w` exists.
//!
//! With `N(u, d)` the sorted neighbors of `u` in direction `d`, the counts at
//! head `u` reduce to
//!
//! ```text
//! W_xy(u)   = Σ_{v ∈ N(u,x)} (|N(v,y)| - [u ∈ N(v,y)])
//! W^z_xy(u) = Σ_{v ∈ N(u,x)} |N(v,y) ∩ N(u,z)|
//! ```
//!
//! The tail can never equal the head in the second sum because `u ∉ N(u, z)`.

use rayon::prelude::*;
use serde::Serialize;

use crate::direction::{CoefficientKey, Direction, WedgeType};
use crate::error::{Error, Result};
use crate::graph::{sorted_intersection_len, DirectedGraph};
use crate::keyed::{ByKey, ByType};

/// Wedge and closed-wedge counts with head `u`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct NodeClosureProfile {
    pub wedges: ByType<u64>,
    pub closed: ByKey<u64>,
}

impl NodeClosureProfile {
    /// Both coefficients of type `t` exist iff there is at least one `t`-wedge.
    #[inline]
    pub fn defined(&self, t: WedgeType) -> bool {
        self.wedges[t] > 0
    }

    /// `H^z_xy(u)`, or `None` when undefined.
    pub fn coefficient(&self, key: CoefficientKey) -> Option<f64> {
        let total = self.wedges[key.wedge_type()];
        (total > 0).then(|| self.closed[key] as f64 / total as f64)
    }

    pub fn coefficients(&self) -> ByKey<Option<f64>> {
        ByKey::from_fn(|k| self.coefficient(k))
    }
}

fn check_node(g: &DirectedGraph, u: usize) -> Result<()> {
    if u < g.node_count() {
        Ok(())
    } else {
        Err(Error::NodeOutOfRange { node: u, n: g.node_count() })
    }
}

#[inline]
fn wedges_at(g: &DirectedGraph, u: usize, t: WedgeType) -> u64 {
    g.neighbors(u, t.first)
        .iter()
        .map(|&v| {
            let v = v as usize;
            // is `u` itself among v's y-neighbors, i.e. would the tail be the head?
            let back = match t.second {
                Direction::Out => g.contains_edge(v, u),
                Direction::In => g.contains_edge(u, v),
            };
            (g.deg(v, t.second) - usize::from(back)) as u64
        })
        .sum()
}

#[inline]
fn closed_at(g: &DirectedGraph, u: usize, key: CoefficientKey) -> u64 {
    let closers = g.neighbors(u, key.z);
    if closers.is_empty() {
        return 0;
    }
    g.neighbors(u, key.x)
        .iter()
        .map(|&v| sorted_intersection_len(g.neighbors(v as usize, key.y), closers) as u64)
        .sum()
}

/// Number of `t`-wedges with head `u`.
pub fn wedge_count(g: &DirectedGraph, u: usize, t: WedgeType) -> Result<u64> {
    check_node(g, u)?;
    Ok(wedges_at(g, u, t))
}

/// Number of `key.z`-closed `key.x key.y`-wedges with head `u`.
pub fn closed_wedge_count(g: &DirectedGraph, u: usize, key: CoefficientKey) -> Result<u64> {
    check_node(g, u)?;
    Ok(closed_at(g, u, key))
}

fn profile_at(g: &DirectedGraph, u: usize) -> NodeClosureProfile {
    NodeClosureProfile {
        wedges: ByType::from_fn(|t| wedges_at(g, u, t)),
        closed: ByKey::from_fn(|k| closed_at(g, u, k)),
    }
}

/// All counts and coefficients with head `u`.
pub fn local_closure(g: &DirectedGraph, u: usize) -> Result<NodeClosureProfile> {
    check_node(g, u)?;
    Ok(profile_at(g, u))
}

/// Profiles of every node, in node order. Runs in parallel over nodes.
pub fn all_local_closure(g: &DirectedGraph) -> Vec<NodeClosureProfile> {
    (0..g.node_count()).into_par_iter().map(|u| profile_at(g, u)).collect()
}

/// Node-mean of each local coefficient, undefined values counted as 0.
pub fn average_from_profiles(profiles: &[NodeClosureProfile]) -> Result<ByKey<f64>> {
    if profiles.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let n = profiles.len() as f64;
    Ok(ByKey::from_fn(|k| {
        profiles.iter().map(|p| p.coefficient(k).unwrap_or(0.0)).sum::<f64>() / n
    }))
}

/// Ratio of total closed wedges to total wedges, per key.
pub fn global_from_profiles(profiles: &[NodeClosureProfile]) -> ByKey<Option<f64>> {
    let mut total = NodeClosureProfile::default();
    for p in profiles {
        for t in WedgeType::ALL {
            total.wedges[t] += p.wedges[t];
        }
        for k in CoefficientKey::ALL {
            total.closed[k] += p.closed[k];
        }
    }
    total.coefficients()
}

/// Average directed closure coefficients; needs at least one node.
pub fn average_closure(g: &DirectedGraph) -> Result<ByKey<f64>> {
    average_from_profiles(&all_local_closure(g))
}

/// Global directed closure coefficients; `None` where no wedge of that type exists.
pub fn global_closure(g: &DirectedGraph) -> ByKey<Option<f64>> {
    global_from_profiles(&all_local_closure(g))
}

/// Average and global coefficients from one sweep.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClosureSummary {
    pub average: ByKey<f64>,
    pub global: ByKey<Option<f64>>,
}

pub fn closure_summary(g: &DirectedGraph) -> Result<ClosureSummary> {
    let profiles = all_local_closure(g);
    Ok(ClosureSummary {
        average: average_from_profiles(&profiles)?,
        global: global_from_profiles(&profiles),
    })
}

/// Difference within one pair of global coefficients that must agree.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SymmetryResidual {
    pub left: CoefficientKey,
    pub right: CoefficientKey,
    /// `|left - right|`; 0 when both are undefined, infinite when only one is.
    pub residual: f64,
    pub definedness_mismatch: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SymmetryReport {
    pub pairs: [SymmetryResidual; 4],
}

impl SymmetryReport {
    pub fn max_residual(&self) -> f64 {
        self.pairs.iter().map(|p| p.residual).fold(0.0, f64::max)
    }

    pub fn holds(&self, tol: f64) -> bool {
        self.pairs.iter().all(|p| !p.definedness_mismatch && p.residual <= tol)
    }
}

/// Residuals of the four global-coefficient identities
/// `ii_i = oo_o`, `ii_o = oo_i`, `io_i = io_o`, `oi_i = oi_o`.
pub fn check_symmetry(global: &ByKey<Option<f64>>) -> SymmetryReport {
    let pairs = CoefficientKey::SYMMETRIC_PAIRS.map(|(left, right)| {
        let (residual, definedness_mismatch) = match (global[left], global[right]) {
            (Some(a), Some(b)) => ((a - b).abs(), false),
            (None, None) => (0.0, false),
            _ => (f64::INFINITY, true),
        };
        SymmetryResidual { left, right, residual, definedness_mismatch }
    });
    SymmetryReport { pairs }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_edge_list;
    use Direction::{In as I, Out as O};

    const II: WedgeType = WedgeType::new(I, I);
    const IO: WedgeType = WedgeType::new(I, O);
    const OI: WedgeType = WedgeType::new(O, I);
    const OO: WedgeType = WedgeType::new(O, O);

    fn key(x: Direction, y: Direction, z: Direction) -> CoefficientKey {
        CoefficientKey::new(x, y, z)
    }

    fn ffw() -> DirectedGraph {
        // a=0, b=1, c=2
        parse_edge_list("a b\nb c\na c").unwrap().graph
    }

    fn cycle3() -> DirectedGraph {
        parse_edge_list("a b\nb c\nc a").unwrap().graph
    }

    #[test]
    fn feedforward_wedge_counts() {
        let g = ffw();
        assert_eq!(wedge_count(&g, 0, OO).unwrap(), 1);
        assert_eq!(wedge_count(&g, 0, OI).unwrap(), 1);
        assert_eq!(wedge_count(&g, 0, II).unwrap(), 0);
        assert_eq!(wedge_count(&g, 0, IO).unwrap(), 0);
    }

    #[test]
    fn cycle_has_no_mixed_wedges() {
        let g = cycle3();
        for u in 0..3 {
            assert_eq!(wedge_count(&g, u, OI).unwrap(), 0);
            assert_eq!(wedge_count(&g, u, IO).unwrap(), 0);
        }
    }

    #[test]
    fn feedforward_closed_counts() {
        let g = ffw();
        assert_eq!(closed_wedge_count(&g, 0, key(O, O, O)).unwrap(), 1);
        assert_eq!(closed_wedge_count(&g, 0, key(O, O, I)).unwrap(), 0);
        assert_eq!(closed_wedge_count(&g, 2, key(I, I, I)).unwrap(), 1);
        assert_eq!(closed_wedge_count(&g, 2, key(I, O, I)).unwrap(), 1);
    }

    #[test]
    fn feedforward_local_coefficients() {
        let g = ffw();
        let a = local_closure(&g, 0).unwrap();
        assert_eq!(a.coefficient(key(O, O, O)), Some(1.0));
        assert_eq!(a.coefficient(key(O, O, I)), Some(0.0));
        assert_eq!(a.coefficient(key(I, O, I)), None);
        assert_eq!(a.coefficient(key(I, O, O)), None);
        assert!(!a.defined(IO));
        let c = local_closure(&g, 2).unwrap();
        assert_eq!(c.coefficient(key(I, I, I)), Some(1.0));
        assert_eq!(c.coefficient(key(I, O, I)), Some(1.0));
    }

    #[test]
    fn isolated_node_is_undefined_everywhere() {
        let g = DirectedGraph::from_edges(3, [(0, 1)]).unwrap();
        let p = local_closure(&g, 2).unwrap();
        assert!(p.coefficients().0.iter().all(Option::is_none));
        assert!(WedgeType::ALL.iter().all(|&t| !p.defined(t)));
    }

    #[test]
    fn feedforward_averages_and_globals() {
        let g = ffw();
        let avg = average_closure(&g).unwrap();
        let third = 1.0 / 3.0;
        assert!((avg[key(O, O, O)] - third).abs() < 1e-15);
        assert!((avg[key(I, O, I)] - third).abs() < 1e-15);
        assert!((avg[key(I, O, O)] - third).abs() < 1e-15);

        let glob = global_closure(&g);
        assert_eq!(glob[key(O, O, O)], Some(1.0));
        assert_eq!(glob[key(I, I, I)], Some(1.0));
        assert_eq!(glob[key(I, O, I)], Some(0.5));
        assert_eq!(glob[key(I, O, O)], Some(0.5));
        let sym = check_symmetry(&glob);
        assert_eq!(sym.max_residual(), 0.0);
        assert!(sym.holds(0.0));
    }

    #[test]
    fn cycle_averages_and_undefined_globals() {
        let g = cycle3();
        let avg = average_closure(&g).unwrap();
        assert_eq!(avg[key(O, O, I)], 1.0);
        assert_eq!(avg[key(O, O, O)], 0.0);
        let glob = global_closure(&g);
        for z in [I, O] {
            assert_eq!(glob[key(O, I, z)], None);
            assert_eq!(glob[key(I, O, z)], None);
        }
        assert!(check_symmetry(&glob).holds(0.0));
    }

    #[test]
    fn mixed_definedness_is_a_violation() {
        let mut glob = ByKey([Some(0.5); 8]);
        glob[key(I, O, O)] = None;
        let rep = check_symmetry(&glob);
        assert!(!rep.holds(1.0));
        assert!(rep.pairs[2].definedness_mismatch);
    }

    #[test]
    fn average_of_empty_graph_fails() {
        assert!(average_closure(&DirectedGraph::empty(0)).is_err());
        assert!(global_closure(&DirectedGraph::empty(0)).0.iter().all(Option::is_none));
    }
}
