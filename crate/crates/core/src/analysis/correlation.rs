use std::io::Write;

use serde::Serialize;

use crate::closure::{all_local_closure, NodeClosureProfile};
use crate::direction::CoefficientKey;
use crate::error::{Error, Result};
use crate::graph::DirectedGraph;

/// Pearson correlations between the eight local closure coefficients,
/// computed over the nodes where both coefficients of a pair are defined.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CorrelationMatrix {
    /// `None` where fewer than two nodes qualify or either column is constant.
    pub values: [[Option<f64>; 8]; 8],
    /// Nodes contributing to each entry.
    pub sizes: [[usize; 8]; 8],
}

fn pearson(pairs: &[(f64, f64)]) -> Option<f64> {
    if pairs.len() < 2 {
        return None;
    }
    let k = pairs.len() as f64;
    let ma = pairs.iter().map(|p| p.0).sum::<f64>() / k;
    let mb = pairs.iter().map(|p| p.1).sum::<f64>() / k;
    let (mut sab, mut saa, mut sbb) = (0.0, 0.0, 0.0);
    for &(a, b) in pairs {
        let (da, db) = (a - ma, b - mb);
        sab += da * db;
        saa += da * da;
        sbb += db * db;
    }
    if saa <= 0.0 || sbb <= 0.0 {
        return None;
    }
    Some((sab / (saa.sqrt() * sbb.sqrt())).clamp(-1.0, 1.0))
}

impl CorrelationMatrix {
    pub fn from_profiles(profiles: &[NodeClosureProfile]) -> Self {
        let coeffs: Vec<_> = profiles.iter().map(NodeClosureProfile::coefficients).collect();
        let mut values = [[None; 8]; 8];
        let mut sizes = [[0; 8]; 8];
        for a in 0..8 {
            for b in a..8 {
                let pairs: Vec<(f64, f64)> =
                    coeffs.iter().filter_map(|c| Some((c.0[a]?, c.0[b]?))).collect();
                let r = pearson(&pairs).map(|r| if a == b { 1.0 } else { r });
                values[a][b] = r;
                values[b][a] = r;
                sizes[a][b] = pairs.len();
                sizes[b][a] = pairs.len();
            }
        }
        CorrelationMatrix { values, sizes }
    }

    pub fn get(&self, a: CoefficientKey, b: CoefficientKey) -> Option<f64> {
        self.values[a.index()][b.index()]
    }

    /// Mean defined correlation among distinct keys sharing a closing
    /// direction, and among keys with different closing directions.
    pub fn block_means(&self) -> (Option<f64>, Option<f64>) {
        let (mut within, mut cross) = (Vec::new(), Vec::new());
        for a in CoefficientKey::ALL {
            for b in CoefficientKey::ALL {
                if a >= b {
                    continue;
                }
                if let Some(r) = self.get(a, b) {
                    if a.z == b.z {
                        within.push(r)
                    } else {
                        cross.push(r)
                    }
                }
            }
        }
        let mean = |v: &[f64]| (!v.is_empty()).then(|| v.iter().sum::<f64>() / v.len() as f64);
        (mean(&within), mean(&cross))
    }

    /// 8×8 CSV with canonical key names as header row and first column.
    pub fn write_csv<W: Write>(&self, w: W) -> Result<()> {
        let mut out = csv::Writer::from_writer(w);
        let mut header = vec![String::new()];
        header.extend(CoefficientKey::ALL.iter().map(|k| k.column_name()));
        out.write_record(&header)?;
        for a in CoefficientKey::ALL {
            let mut row = vec![a.column_name()];
            row.extend(
                CoefficientKey::ALL.iter().map(|&b| self.get(a, b).map(|r| r.to_string()).unwrap_or_default()),
            );
            out.write_record(&row)?;
        }
        out.flush()?;
        Ok(())
    }
}

/// Correlation matrix of the local closure coefficients of `g`; needs two nodes.
pub fn closure_correlation_matrix(g: &DirectedGraph) -> Result<CorrelationMatrix> {
    if g.node_count() < 2 {
        return Err(Error::InvalidArgument("correlations need at least 2 nodes".into()));
    }
    Ok(CorrelationMatrix::from_profiles(&all_local_closure(g)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::direction::Direction::{In as I, Out as O};
    use crate::graph::parse_edge_list;

    #[test]
    fn pearson_basics() {
        assert_eq!(pearson(&[(1.0, 2.0)]), None);
        assert_eq!(pearson(&[(1.0, 2.0), (1.0, 3.0)]), None);
        let r = pearson(&[(0.0, 1.0), (1.0, 3.0), (2.0, 5.0)]).unwrap();
        assert!((r - 1.0).abs() < 1e-15);
        let r = pearson(&[(0.0, 1.0), (1.0, 0.0)]).unwrap();
        assert!((r + 1.0).abs() < 1e-15);
    }

    #[test]
    fn symmetric_with_unit_diagonal() {
        let g = parse_edge_list("a b\nb c\nc a\na c\nc d\nd a\nb d\ne a\ne b\nd e").unwrap().graph;
        let cm = closure_correlation_matrix(&g).unwrap();
        for a in 0..8 {
            for b in 0..8 {
                assert_eq!(cm.values[a][b], cm.values[b][a]);
                assert_eq!(cm.sizes[a][b], cm.sizes[b][a]);
                if let Some(r) = cm.values[a][b] {
                    assert!((-1.0..=1.0).contains(&r));
                }
            }
            if cm.values[a][a].is_some() {
                assert_eq!(cm.values[a][a], Some(1.0));
            }
        }
    }

    #[test]
    fn identical_columns_correlate_perfectly() {
        // every edge reciprocated: in- and out-neighborhoods coincide, so all
        // eight local coefficients agree at each node
        let mut text = String::new();
        for (u, v) in [("a", "b"), ("b", "c"), ("c", "a"), ("a", "d"), ("d", "e")] {
            text.push_str(&format!("{u} {v}\n{v} {u}\n"));
        }
        let g = parse_edge_list(&text).unwrap().graph;
        let profiles = all_local_closure(&g);
        let ii_i = CoefficientKey::new(I, I, I);
        let oo_i = CoefficientKey::new(O, O, I);
        for p in &profiles {
            assert_eq!(p.coefficient(ii_i).is_some(), p.coefficient(oo_i).is_some());
            if let (Some(x), Some(y)) = (p.coefficient(ii_i), p.coefficient(oo_i)) {
                assert_eq!(x, y);
            }
        }
        let cm = CorrelationMatrix::from_profiles(&profiles);
        assert!((cm.get(ii_i, oo_i).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn csv_layout() {
        let g = parse_edge_list("a b\nb c\nc a").unwrap().graph;
        let mut buf = Vec::new();
        closure_correlation_matrix(&g).unwrap().write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 9);
        assert!(lines[0].starts_with(",closure_ii_i,closure_ii_o"));
        assert!(lines[8].starts_with("closure_oo_o,"));
    }

    #[test]
    fn needs_two_nodes() {
        assert!(closure_correlation_matrix(&DirectedGraph::empty(1)).is_err());
    }
}
