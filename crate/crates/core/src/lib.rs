//! Directed closure coefficients.
//!
//! Triadic closure in a directed graph measured from the head of each wedge
//! (eight local, average and global closure coefficients) next to the
//! center-based directed clustering coefficients, together with their
//! leading-order expectations under the directed configuration model and a
//! degree-preserving swap sampler to check them against.
//!
//! ```
//! use triclose::{average_closure, parse_edge_list, CoefficientKey};
//!
//! let g = parse_edge_list("a b\nb c\na c").unwrap().graph;
//! let avg = average_closure(&g).unwrap();
//! let key: CoefficientKey = "oo_o".parse().unwrap();
//! assert!((avg[key] - 1.0 / 3.0).abs() < 1e-15);
//! ```

pub mod analysis;
pub mod closure;
pub mod clustering;
pub mod direction;
pub mod error;
pub mod extremal;
pub mod generators;
pub mod graph;
pub mod keyed;
pub mod moments;
pub mod nullmodel;

pub use closure::{
    all_local_closure, average_closure, check_symmetry, closed_wedge_count, closure_summary,
    global_closure, local_closure, wedge_count, ClosureSummary, NodeClosureProfile,
    SymmetryReport,
};
pub use clustering::{all_local_clustering, local_clustering, mean_clustering, NodeClusteringProfile};
pub use direction::{CoefficientKey, Direction, WedgeType};
pub use error::{Error, Result};
pub use graph::{load_edge_list, parse_edge_list, DirectedGraph, IngestWarnings, LoadedGraph};
pub use keyed::{ByKey, ByType};
pub use moments::{moments, DegreeMoments};
