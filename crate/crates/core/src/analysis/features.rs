//! Per-node CSV exports: the predictor matrix and the raw closure counts.
//!
//! Numbers are written in Rust's shortest round-trip form, so parsing an
//! exported cell gives back the identical `f64`. Undefined coefficients are
//! empty cells.

use std::collections::{BTreeMap, HashMap};
use std::io::{Read, Write};

use crate::closure::{all_local_closure, NodeClosureProfile};
use crate::clustering::{all_local_clustering, NodeClusteringProfile};
use crate::direction::{CoefficientKey, WedgeType};
use crate::error::Result;
use crate::graph::DirectedGraph;

/// Node labels keyed by original token, in file order.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct NodeLabels {
    entries: Vec<(String, String)>,
    index: HashMap<String, usize>,
}

impl NodeLabels {
    pub fn get(&self, token: &str) -> Option<&str> {
        self.index.get(token).map(|&i| self.entries[i].1.as_str())
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &str)> {
        self.entries.iter().map(|(t, l)| (t.as_str(), l.as_str()))
    }

    /// Sets the label of `token`, replacing an earlier one.
    pub fn insert(&mut self, token: String, label: String) {
        match self.index.get(&token) {
            Some(&i) => self.entries[i].1 = label,
            None => {
                self.index.insert(token.clone(), self.entries.len());
                self.entries.push((token, label));
            }
        }
    }
}

impl FromIterator<(String, String)> for NodeLabels {
    fn from_iter<I: IntoIterator<Item = (String, String)>>(iter: I) -> Self {
        let mut labels = NodeLabels::default();
        for (t, l) in iter {
            labels.insert(t, l);
        }
        labels
    }
}

/// Reads a two-column `token,label` CSV. A first row of exactly
/// `token,label` is treated as a header.
pub fn load_labels<R: Read>(source: R) -> Result<NodeLabels> {
    let mut reader = csv::ReaderBuilder::new().has_headers(false).trim(csv::Trim::All).from_reader(source);
    let mut labels = NodeLabels::default();
    for (i, rec) in reader.records().enumerate() {
        let rec = rec?;
        if rec.len() != 2 {
            return Err(crate::Error::Parse { line: i + 1, found: rec.len() });
        }
        if i == 0 && &rec[0] == "token" && &rec[1] == "label" {
            continue;
        }
        labels.insert(rec[0].to_owned(), rec[1].to_owned());
    }
    Ok(labels)
}

/// Edge counts by `(source label, target label)` over edges whose endpoints
/// are both labeled.
pub fn label_edge_tallies(g: &DirectedGraph, labels: &NodeLabels) -> BTreeMap<(String, String), u64> {
    let node_labels: Vec<Option<&str>> = (0..g.node_count()).map(|u| labels.get(&g.token(u))).collect();
    let mut tallies = BTreeMap::new();
    for (u, v) in g.edges() {
        if let (Some(a), Some(b)) = (node_labels[u], node_labels[v]) {
            *tallies.entry((a.to_owned(), b.to_owned())).or_insert(0) += 1;
        }
    }
    tallies
}

/// One row of the predictor matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct FeatureRow {
    pub token: String,
    pub label: Option<String>,
    pub d_in: usize,
    pub d_out: usize,
    pub d_recip: usize,
    pub closure: [Option<f64>; 8],
    pub clustering: [Option<f64>; 4],
}

impl FeatureRow {
    /// Column names in output order.
    pub fn header() -> Vec<String> {
        let mut h: Vec<String> =
            ["token", "label", "d_in", "d_out", "d_recip"].iter().map(|s| s.to_string()).collect();
        h.extend(CoefficientKey::ALL.iter().map(|k| k.column_name()));
        h.extend(WedgeType::ALL.iter().map(|t| format!("clustering_{t}")));
        h.extend(CoefficientKey::ALL.iter().map(|k| format!("defined_{}", k.column_name())));
        h.extend(WedgeType::ALL.iter().map(|t| format!("defined_clustering_{t}")));
        h
    }

    pub fn record(&self) -> Vec<String> {
        let mut r = vec![
            self.token.clone(),
            self.label.clone().unwrap_or_default(),
            self.d_in.to_string(),
            self.d_out.to_string(),
            self.d_recip.to_string(),
        ];
        r.extend(self.closure.iter().map(|v| fmt_opt(*v)));
        r.extend(self.clustering.iter().map(|v| fmt_opt(*v)));
        r.extend(self.closure.iter().map(|v| flag(v.is_some())));
        r.extend(self.clustering.iter().map(|v| flag(v.is_some())));
        r
    }
}

fn fmt_opt(v: Option<f64>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

fn flag(b: bool) -> String {
    if b { "1" } else { "0" }.to_string()
}

/// Builds one feature row per node.
pub fn feature_rows(g: &DirectedGraph, labels: Option<&NodeLabels>) -> Vec<FeatureRow> {
    let closure = all_local_closure(g);
    let clustering = all_local_clustering(g);
    (0..g.node_count())
        .map(|u| {
            let token = g.token(u).into_owned();
            FeatureRow {
                label: labels.and_then(|l| l.get(&token)).map(str::to_owned),
                token,
                d_in: g.in_neighbors(u).len(),
                d_out: g.out_neighbors(u).len(),
                d_recip: g.reciprocal_degree(u).expect("node in range"),
                closure: closure[u].coefficients().0,
                clustering: clustering[u].coefficients().0,
            }
        })
        .collect()
}

/// Outcome of [`export_features`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExportSummary {
    pub rows: usize,
    /// Label tokens that do not name a node; skipped.
    pub unknown_label_tokens: Vec<String>,
}

/// Writes the predictor matrix as CSV with a header row.
pub fn export_features<W: Write>(
    g: &DirectedGraph,
    labels: Option<&NodeLabels>,
    sink: W,
) -> Result<ExportSummary> {
    let unknown_label_tokens = match labels {
        Some(l) => {
            let known = g.token_index();
            l.iter().filter(|(t, _)| !known.contains_key(*t)).map(|(t, _)| t.to_owned()).collect()
        }
        None => Vec::new(),
    };
    let rows = feature_rows(g, labels);
    let mut out = csv::Writer::from_writer(sink);
    out.write_record(FeatureRow::header())?;
    for row in &rows {
        out.write_record(row.record())?;
    }
    out.flush()?;
    Ok(ExportSummary { rows: rows.len(), unknown_label_tokens })
}

/// Header of [`write_closure_csv`].
pub fn closure_csv_header() -> Vec<String> {
    let mut h = vec!["dense_id".to_string(), "token".to_string()];
    h.extend(WedgeType::ALL.iter().map(|t| format!("wedges_{t}")));
    h.extend(CoefficientKey::ALL.iter().map(|k| format!("closed_{k}")));
    h.extend(CoefficientKey::ALL.iter().map(|k| k.column_name()));
    h.extend(WedgeType::ALL.iter().map(|t| format!("defined_{t}")));
    h
}

/// Per-node wedge counts, closed counts, coefficients and definedness.
pub fn write_closure_csv<W: Write>(
    g: &DirectedGraph,
    profiles: &[NodeClosureProfile],
    sink: W,
) -> Result<()> {
    let mut out = csv::Writer::from_writer(sink);
    out.write_record(closure_csv_header())?;
    for (u, p) in profiles.iter().enumerate() {
        let mut r = vec![u.to_string(), g.token(u).into_owned()];
        r.extend(p.wedges.0.iter().map(u64::to_string));
        r.extend(p.closed.0.iter().map(u64::to_string));
        r.extend(p.coefficients().0.iter().map(|v| fmt_opt(*v)));
        r.extend(WedgeType::ALL.iter().map(|&t| flag(p.defined(t))));
        out.write_record(&r)?;
    }
    out.flush()?;
    Ok(())
}

/// Per-node clustering denominators, closed counts and coefficients.
pub fn write_clustering_csv<W: Write>(
    g: &DirectedGraph,
    profiles: &[NodeClusteringProfile],
    sink: W,
) -> Result<()> {
    let mut out = csv::Writer::from_writer(sink);
    let mut h = vec!["dense_id".to_string(), "token".to_string()];
    h.extend(WedgeType::ALL.iter().map(|t| format!("wedges_{t}")));
    h.extend(WedgeType::ALL.iter().map(|t| format!("closed_{t}")));
    h.extend(WedgeType::ALL.iter().map(|t| format!("clustering_{t}")));
    out.write_record(&h)?;
    for (u, p) in profiles.iter().enumerate() {
        let mut r = vec![u.to_string(), g.token(u).into_owned()];
        r.extend(p.denominators.0.iter().map(u64::to_string));
        r.extend(p.closed.0.iter().map(u64::to_string));
        r.extend(p.coefficients().0.iter().map(|v| fmt_opt(*v)));
        out.write_record(&r)?;
    }
    out.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_edge_list;

    fn ffw() -> DirectedGraph {
        parse_edge_list("a b\nb c\na c").unwrap().graph
    }

    fn read_back(buf: &[u8]) -> Vec<BTreeMap<String, String>> {
        let mut rdr = csv::Reader::from_reader(buf);
        let header: Vec<String> = rdr.headers().unwrap().iter().map(str::to_owned).collect();
        rdr.records()
            .map(|r| header.iter().cloned().zip(r.unwrap().iter().map(str::to_owned)).collect())
            .collect()
    }

    #[test]
    fn feedforward_feature_rows() {
        let mut buf = Vec::new();
        let summary = export_features(&ffw(), None, &mut buf).unwrap();
        assert_eq!(summary.rows, 3);
        let rows = read_back(&buf);
        let a = &rows[0];
        assert_eq!(a["token"], "a");
        assert_eq!(a["label"], "");
        assert_eq!(a["d_in"], "0");
        assert_eq!(a["d_out"], "2");
        assert_eq!(a["d_recip"], "0");
        assert_eq!(a["closure_oo_o"], "1");
        assert_eq!(a["closure_io_i"], "");
        assert_eq!(a["defined_closure_io_i"], "0");
        assert_eq!(a["defined_closure_oo_o"], "1");
        assert_eq!(FeatureRow::header().len(), 5 + 8 + 4 + 12);
    }

    #[test]
    fn labels_ride_along_and_unknowns_are_reported() {
        let labels = load_labels("token,label\na,x\nc,y\nzz,x\n".as_bytes()).unwrap();
        assert_eq!(labels.len(), 3);
        let mut buf = Vec::new();
        let summary = export_features(&ffw(), Some(&labels), &mut buf).unwrap();
        assert_eq!(summary.unknown_label_tokens, ["zz"]);
        let rows = read_back(&buf);
        assert_eq!(rows[0]["label"], "x");
        assert_eq!(rows[1]["label"], "");
        assert_eq!(rows[2]["label"], "y");
    }

    #[test]
    fn labels_without_header() {
        let labels = load_labels("a,1\nb,2\n".as_bytes()).unwrap();
        assert_eq!(labels.get("a"), Some("1"));
        assert!(load_labels("a,1,2\n".as_bytes()).is_err());
    }

    #[test]
    fn tallies_match_hand_count() {
        let g = ffw();
        let labels: NodeLabels =
            [("a", "p"), ("b", "q"), ("c", "p")].iter().map(|&(t, l)| (t.into(), l.into())).collect();
        let t = label_edge_tallies(&g, &labels);
        assert_eq!(t[&("p".into(), "q".into())], 1);
        assert_eq!(t[&("q".into(), "p".into())], 1);
        assert_eq!(t[&("p".into(), "p".into())], 1);
        assert_eq!(t.values().sum::<u64>(), 3);
    }

    #[test]
    fn closure_csv_columns() {
        let g = ffw();
        let mut buf = Vec::new();
        write_closure_csv(&g, &all_local_closure(&g), &mut buf).unwrap();
        let rows = read_back(&buf);
        assert_eq!(rows[0]["wedges_oo"], "1");
        assert_eq!(rows[0]["closed_oo_o"], "1");
        assert_eq!(rows[0]["defined_io"], "0");
        assert_eq!(rows[2]["closure_io_i"], "1");
        assert_eq!(closure_csv_header().len(), 2 + 4 + 8 + 8 + 4);
    }
}
