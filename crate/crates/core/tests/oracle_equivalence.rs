mod support;

use support::oracle::{random_digraph, rng, Oracle};
use triclose::analysis::label_edge_tallies;
use triclose::{
    all_local_closure, closed_wedge_count, global_closure, local_clustering, wedge_count,
    CoefficientKey, Direction, WedgeType,
};

#[test]
fn wedge_and_closed_counts_match_enumeration() {
    let mut r = rng(0xC0FFEE);
    for _ in 0..120 {
        let g = random_digraph(&mut r, 25);
        let oracle = Oracle::new(&g);
        let brute = oracle.closure_counts();
        for u in 0..g.node_count() {
            for t in WedgeType::ALL {
                assert_eq!(wedge_count(&g, u, t).unwrap(), brute[u].wedges[t.index()], "W_{t}({u})");
            }
            for k in CoefficientKey::ALL {
                assert_eq!(closed_wedge_count(&g, u, k).unwrap(), brute[u].closed[k.index()], "W^{k}({u})");
            }
        }
    }
}

#[test]
fn clustering_counts_match_triple_loop() {
    let mut r = rng(17);
    for _ in 0..120 {
        let g = random_digraph(&mut r, 25);
        let oracle = Oracle::new(&g);
        for u in 0..g.node_count() {
            let p = local_clustering(&g, u).unwrap();
            let (den, closed) = oracle.clustering_counts(u);
            assert_eq!(p.denominators.0, den, "D({u})");
            assert_eq!(p.closed.0, closed, "T({u})");
        }
    }
}

#[test]
fn degree_queries_match_scans() {
    let mut r = rng(3);
    for _ in 0..60 {
        let g = random_digraph(&mut r, 20);
        let oracle = Oracle::new(&g);
        for u in 0..g.node_count() {
            assert_eq!(g.reciprocal_degree(u).unwrap(), oracle.reciprocal_degree(u));
            for d in Direction::ALL {
                assert_eq!(g.degree(u, d).unwrap(), oracle.degree(u, d));
            }
            for v in 0..g.node_count() {
                let linear = g.out_neighbors(u).iter().any(|&w| w as usize == v);
                assert_eq!(g.has_edge(u, v).unwrap(), linear);
            }
        }
    }
}

#[test]
fn global_is_wedge_weighted_mean_of_locals() {
    let mut r = rng(99);
    for _ in 0..80 {
        let g = random_digraph(&mut r, 25);
        let profiles = all_local_closure(&g);
        let glob = global_closure(&g);
        for k in CoefficientKey::ALL {
            let t = k.wedge_type();
            let weight: u64 = profiles.iter().map(|p| p.wedges[t]).sum();
            let weighted: f64 = profiles
                .iter()
                .filter_map(|p| p.coefficient(k).map(|h| h * p.wedges[t] as f64))
                .sum();
            match glob[k] {
                Some(h) => assert!((h - weighted / weight as f64).abs() <= 1e-12),
                None => assert_eq!(weight, 0),
            }
        }
    }
}

#[test]
fn tallies_match_direct_count() {
    let mut r = rng(5);
    let g = random_digraph(&mut r, 25);
    let labels = (0..g.node_count()).map(|u| (u.to_string(), (u % 3).to_string())).collect();
    let tallies = label_edge_tallies(&g, &labels);
    let oracle = Oracle::new(&g);
    for a in 0..3 {
        for b in 0..3 {
            let direct =
                oracle.edges.iter().filter(|&&(u, v)| u % 3 == a && v % 3 == b).count() as u64;
            let got = tallies.get(&(a.to_string(), b.to_string())).copied().unwrap_or(0);
            assert_eq!(got, direct);
        }
    }
}
