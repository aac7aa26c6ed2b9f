use serde::Serialize;

use crate::closure::{
    all_local_closure, average_from_profiles, check_symmetry, global_from_profiles, SymmetryReport,
};
use crate::clustering::{all_local_clustering, mean_from_profiles};
use crate::direction::WedgeType;
use crate::error::Result;
use crate::graph::DirectedGraph;
use crate::keyed::{ByKey, ByType};
use crate::moments::{moments, DegreeMoments};

/// Whole-graph numbers in one serializable document.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SummaryReport {
    pub n: usize,
    pub m: usize,
    pub moments: DegreeMoments,
    pub average: ByKey<f64>,
    pub global: ByKey<Option<f64>>,
    pub clustering_mean: ByType<f64>,
    /// Nodes heading no wedge of each type.
    pub undefined_nodes: ByType<usize>,
    pub symmetry: SymmetryReport,
}

pub fn summary_report(g: &DirectedGraph) -> Result<SummaryReport> {
    let mom = moments(g)?;
    let profiles = all_local_closure(g);
    let global = global_from_profiles(&profiles);
    Ok(SummaryReport {
        n: g.node_count(),
        m: g.edge_count(),
        moments: mom,
        average: average_from_profiles(&profiles)?,
        symmetry: check_symmetry(&global),
        global,
        clustering_mean: mean_from_profiles(&all_local_clustering(g))?,
        undefined_nodes: ByType::from_fn(|t: WedgeType| {
            profiles.iter().filter(|p| !p.defined(t)).count()
        }),
    })
}
