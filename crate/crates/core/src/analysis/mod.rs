//! Cross-node analyses and exports built on the coefficient modules.

mod correlation;
mod features;
mod summary;

pub use correlation::{closure_correlation_matrix, CorrelationMatrix};
pub use features::{
    closure_csv_header, export_features, feature_rows, label_edge_tallies, load_labels,
    write_closure_csv, write_clustering_csv, ExportSummary, FeatureRow, NodeLabels,
};
pub use summary::{summary_report, SummaryReport};
