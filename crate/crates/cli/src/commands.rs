use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::Context;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use triclose::analysis::{
    closure_correlation_matrix, export_features, label_edge_tallies, load_labels, summary_report,
    write_closure_csv, write_clustering_csv, NodeLabels,
};
use triclose::extremal::{build_extremal, compare_extremal, ExtremalSpec};
use triclose::nullmodel::{
    expected_average_closure, expected_clustering, expected_global_closure, run_null_experiment,
    CoefficientStats, CountMode, ExperimentConfig, SwapChainConfig,
};
use triclose::{
    all_local_closure, all_local_clustering, closure_summary, load_edge_list, mean_clustering,
    moments, CoefficientKey, DirectedGraph, WedgeType,
};

use crate::output::{Cell, Document, Table};

pub const DEFAULT_SEED: u64 = 1;

/// Closed forms and computed values count as equal within this.
const EXTREMAL_TOL: f64 = 1e-12;

/// An input file kept with its checksum.
pub struct Input {
    pub path: PathBuf,
    pub sha256: String,
    pub bytes: usize,
    pub graph: DirectedGraph,
    pub duplicates: usize,
    pub self_loops: usize,
}

fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

impl Input {
    pub fn read(path: &Path) -> anyhow::Result<Self> {
        let raw = fs::read(path).with_context(|| format!("reading {}", path.display()))?;
        let loaded = load_edge_list(raw.as_slice()).with_context(|| format!("parsing {}", path.display()))?;
        let w = loaded.warnings;
        if w.duplicates > 0 || w.self_loops > 0 {
            eprintln!(
                "warning: {}: dropped {} duplicate edges and {} self-loops",
                path.display(),
                w.duplicates,
                w.self_loops
            );
        }
        Ok(Input {
            path: path.to_path_buf(),
            sha256: digest(&raw),
            bytes: raw.len(),
            graph: loaded.graph,
            duplicates: w.duplicates,
            self_loops: w.self_loops,
        })
    }

    fn meta(&self) -> Value {
        json!({
            "path": self.path.display().to_string(),
            "sha256": self.sha256,
            "bytes": self.bytes,
            "dropped_duplicates": self.duplicates,
            "dropped_self_loops": self.self_loops,
        })
    }
}

pub struct LabelFile {
    path: PathBuf,
    sha256: String,
    labels: NodeLabels,
}

impl LabelFile {
    pub fn read(path: &Path) -> anyhow::Result<Self> {
        let raw = fs::read(path).with_context(|| format!("reading {}", path.display()))?;
        let labels = load_labels(raw.as_slice()).with_context(|| format!("parsing {}", path.display()))?;
        Ok(LabelFile { path: path.to_path_buf(), sha256: digest(&raw), labels })
    }

    fn meta(&self) -> Value {
        json!({ "path": self.path.display().to_string(), "sha256": self.sha256 })
    }
}

fn meta(command: &str, inputs: Value, config: Value) -> Value {
    json!({
        "tool": "triclose",
        "version": env!("CARGO_PKG_VERSION"),
        "command": command,
        "inputs": inputs,
        "config": config,
    })
}

pub fn write_out(path: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            Ok(stdout.flush()?)
        }
    }
}

/// Data-only CSV files get their provenance in a `<path>.meta.json` sidecar.
fn write_sidecar(path: &Path, meta: &Value) -> anyhow::Result<()> {
    let mut name = path.as_os_str().to_owned();
    name.push(".meta.json");
    write_out(Some(Path::new(&name)), &(serde_json::to_string_pretty(meta)? + "\n"))
}

fn write_csv_file(
    path: &Path,
    meta: &Value,
    f: impl FnOnce(fs::File) -> triclose::Result<()>,
) -> anyhow::Result<()> {
    let file = fs::File::create(path).with_context(|| format!("creating {}", path.display()))?;
    f(file)?;
    write_sidecar(path, meta)
}

fn moments_table(g: &DirectedGraph) -> anyhow::Result<(Table, Value)> {
    let mom = moments(g)?;
    let mut t = Table::new("graph", &["quantity", "value"]);
    t.push(vec!["n".into(), mom.n.into()]);
    t.push(vec!["m".into(), mom.m.into()]);
    t.push(vec!["M_ii".into(), mom.m_ii.into()]);
    t.push(vec!["M_io".into(), mom.m_io.into()]);
    t.push(vec!["M_oo".into(), mom.m_oo.into()]);
    Ok((t, serde_json::to_value(mom)?))
}

pub fn stats(input: &Input, labels: Option<&LabelFile>) -> anyhow::Result<Document> {
    let g = &input.graph;
    let rep = summary_report(g)?;
    let (graph_t, _) = moments_table(g)?;

    let mut closure = Table::new("closure", &["key", "average", "global"]);
    for (k, avg) in rep.average.iter() {
        closure.push(vec![k.short_name().into(), (*avg).into(), rep.global[k].into()]);
    }
    let mut clus = Table::new("clustering", &["type", "mean", "undefined_closure_nodes"]);
    for (t, mean) in rep.clustering_mean.iter() {
        clus.push(vec![t.name().into(), (*mean).into(), rep.undefined_nodes[t].into()]);
    }
    let mut sym = Table::new("symmetry", &["left", "right", "residual"]);
    for p in &rep.symmetry.pairs {
        sym.push(vec![p.left.short_name().into(), p.right.short_name().into(), p.residual.into()]);
    }
    let mut tables = vec![graph_t, closure, clus, sym];
    let mut result = serde_json::to_value(&rep)?;

    let mut inputs = json!({ "edges": input.meta() });
    if let Some(l) = labels {
        inputs["labels"] = l.meta();
        let tallies = label_edge_tallies(g, &l.labels);
        let mut t = Table::new("label_tallies", &["source_label", "target_label", "edges"]);
        let mut arr = Vec::new();
        for ((a, b), c) in &tallies {
            t.push(vec![a.as_str().into(), b.as_str().into(), (*c).into()]);
            arr.push(json!({ "source": a, "target": b, "edges": c }));
        }
        tables.push(t);
        result["label_tallies"] = Value::Array(arr);
    }
    Ok(Document { meta: meta("stats", inputs, json!({})), tables, json: result })
}

pub fn closure(input: &Input, per_node: Option<&Path>) -> anyhow::Result<Document> {
    let g = &input.graph;
    let sum = closure_summary(g)?;
    let config = json!({ "per_node": per_node.map(|p| p.display().to_string()) });
    let meta = meta("closure", json!({ "edges": input.meta() }), config);
    if let Some(path) = per_node {
        let profiles = all_local_closure(g);
        write_csv_file(path, &meta, |f| write_closure_csv(g, &profiles, f))?;
    }
    let mut t = Table::new("closure", &["key", "average", "global"]);
    for (k, avg) in sum.average.iter() {
        t.push(vec![k.short_name().into(), (*avg).into(), sum.global[k].into()]);
    }
    Ok(Document { meta, tables: vec![t], json: serde_json::to_value(&sum)? })
}

pub fn clustering(input: &Input, per_node: Option<&Path>) -> anyhow::Result<Document> {
    let g = &input.graph;
    let mean = mean_clustering(g)?;
    let profiles = all_local_clustering(g);
    let config = json!({ "per_node": per_node.map(|p| p.display().to_string()) });
    let meta = meta("clustering", json!({ "edges": input.meta() }), config);
    if let Some(path) = per_node {
        write_csv_file(path, &meta, |f| write_clustering_csv(g, &profiles, f))?;
    }
    let mut t = Table::new("clustering", &["type", "mean", "defined_nodes"]);
    let mut defined = serde_json::Map::new();
    for (ty, v) in mean.iter() {
        let k = profiles.iter().filter(|p| p.denominators[ty] > 0).count();
        t.push(vec![ty.name().into(), (*v).into(), k.into()]);
        defined.insert(ty.name(), k.into());
    }
    let json = json!({ "mean": mean, "defined_nodes": defined });
    Ok(Document { meta, tables: vec![t], json })
}

pub fn corr(input: &Input) -> anyhow::Result<Document> {
    let mat = closure_correlation_matrix(&input.graph)?;
    let mut header = vec!["key"];
    let names: Vec<String> = CoefficientKey::ALL.iter().map(|k| k.short_name()).collect();
    header.extend(names.iter().map(String::as_str));
    let mut t = Table::new("correlation", &header);
    for a in CoefficientKey::ALL {
        let mut row: Vec<Cell> = vec![a.short_name().into()];
        row.extend(CoefficientKey::ALL.iter().map(|&b| Cell::from(mat.get(a, b))));
        t.push(row);
    }
    let (within, cross) = mat.block_means();
    let mut blocks = Table::new("blocks", &["block", "mean_correlation"]);
    blocks.push(vec!["same_closing_direction".into(), within.into()]);
    blocks.push(vec!["different_closing_direction".into(), cross.into()]);
    let json = json!({
        "keys": names,
        "values": mat.values,
        "pairs": mat.sizes,
        "mean_same_closing_direction": within,
        "mean_different_closing_direction": cross,
    });
    let meta = meta("corr", json!({ "edges": input.meta() }), json!({ "missing": "pairwise-complete" }));
    Ok(Document { meta, tables: vec![t, blocks], json })
}

pub fn expected(input: &Input) -> anyhow::Result<Document> {
    let g = &input.graph;
    let mom = moments(g)?;
    let emp = closure_summary(g)?;
    let emp_clus = mean_clustering(g)?;
    let (graph_t, mom_json) = moments_table(g)?;

    let mut t = Table::new(
        "closure",
        &["key", "average", "global", "clamped", "empirical_average", "empirical_global"],
    );
    let mut rows = serde_json::Map::new();
    for k in CoefficientKey::ALL {
        let avg = expected_average_closure(&mom, k)?;
        let glob = expected_global_closure(&mom, k)?;
        let clamped = avg.clamped || glob.clamped;
        t.push(vec![
            k.short_name().into(),
            avg.value.into(),
            glob.value.into(),
            clamped.into(),
            emp.average[k].into(),
            emp.global[k].into(),
        ]);
        rows.insert(
            k.short_name(),
            json!({
                "average": avg,
                "global": glob,
                "empirical_average": emp.average[k],
                "empirical_global": emp.global[k],
            }),
        );
    }
    let mut c = Table::new("clustering", &["type", "expected", "clamped", "empirical_mean"]);
    let mut crow = serde_json::Map::new();
    for ty in WedgeType::ALL {
        let e = expected_clustering(&mom, ty)?;
        c.push(vec![ty.name().into(), e.value.into(), e.clamped.into(), emp_clus[ty].into()]);
        crow.insert(ty.name(), json!({ "expected": e, "empirical_mean": emp_clus[ty] }));
    }
    let json = json!({ "moments": mom_json, "closure": rows, "clustering": crow });
    let meta = meta("expected", json!({ "edges": input.meta() }), json!({}));
    Ok(Document { meta, tables: vec![graph_t, t, c], json })
}

pub struct NullOptions {
    pub samples: usize,
    pub swaps: Option<u64>,
    pub count_mode: CountMode,
    pub seed: u64,
    pub bins: usize,
}

fn stats_row(family: &str, key: String, s: &CoefficientStats) -> Vec<Cell> {
    vec![
        family.into(),
        key.into(),
        s.mean.into(),
        s.std.into(),
        s.theory.into(),
        s.theory_clamped.into(),
        s.empirical.into(),
        s.defined_samples.into(),
    ]
}

pub fn nullmodel(input: &Input, opts: NullOptions) -> anyhow::Result<Document> {
    let g = &input.graph;
    let attempts = opts.swaps.unwrap_or_else(|| SwapChainConfig::default_attempts(g.edge_count()));
    let cfg = ExperimentConfig {
        samples: opts.samples,
        chain: SwapChainConfig { attempts, seed: opts.seed, count_mode: opts.count_mode },
        bins: opts.bins,
    };
    let rep = run_null_experiment(g, &cfg)?;

    let mut chain = Table::new("chain", &["quantity", "value"]);
    chain.push(vec!["samples".into(), rep.samples.into()]);
    chain.push(vec!["swaps_per_sample".into(), attempts.into()]);
    chain.push(vec!["proposals".into(), rep.swaps.attempts.into()]);
    chain.push(vec!["accepted".into(), rep.swaps.swapped.into()]);
    chain.push(vec!["rejected_self_loop".into(), rep.swaps.rejected_self_loop.into()]);
    chain.push(vec!["rejected_multi_edge".into(), rep.swaps.rejected_multi_edge.into()]);
    chain.push(vec!["rejected_same_edge".into(), rep.swaps.rejected_same_edge.into()]);
    chain.push(vec!["acceptance_rate".into(), rep.acceptance_rate.into()]);
    chain.push(vec!["max_symmetry_residual".into(), rep.max_symmetry_residual.into()]);

    let mut t = Table::new(
        "coefficients",
        &["family", "key", "mean", "std", "theory", "theory_clamped", "empirical", "defined_samples"],
    );
    for (k, s) in rep.average.iter() {
        t.push(stats_row("average", k.short_name(), s));
    }
    for (k, s) in rep.global.iter() {
        t.push(stats_row("global", k.short_name(), s));
    }
    for (ty, s) in rep.clustering.iter() {
        t.push(stats_row("clustering", ty.name(), s));
    }

    let config = json!({
        "samples": opts.samples,
        "swaps": attempts,
        "count_mode": cfg.chain.count_mode,
        "seed": opts.seed,
        "bins": opts.bins,
        "sample_seed": "splitmix64(seed ^ splitmix64(index))",
    });
    let meta = meta("nullmodel", json!({ "edges": input.meta() }), config);
    Ok(Document { meta, tables: vec![chain, t], json: serde_json::to_value(&rep)? })
}

pub fn extremal(
    classes: [usize; 4],
    edges_out: Option<&Path>,
    classes_out: Option<&Path>,
) -> anyhow::Result<Document> {
    let [n1, n2, n3, n4] = classes;
    let spec = ExtremalSpec::new(n1, n2, n3, n4)?;
    let built = build_extremal(spec)?;
    let cmp = compare_extremal(spec)?;
    let config = json!({
        "classes": classes,
        "edges_out": edges_out.map(|p| p.display().to_string()),
        "classes_out": classes_out.map(|p| p.display().to_string()),
        "tolerance": EXTREMAL_TOL,
    });
    let meta = meta("extremal", json!({}), config);
    if let Some(p) = edges_out {
        let mut buf = Vec::new();
        built.graph.write_edge_list(&mut buf)?;
        write_out(Some(p), std::str::from_utf8(&buf)?)?;
    }
    if let Some(p) = classes_out {
        write_csv_file(p, &meta, |f| built.write_classes(f))?;
    }

    let mut g = Table::new("graph", &["quantity", "value"]);
    g.push(vec!["n".into(), built.graph.node_count().into()]);
    g.push(vec!["m".into(), built.graph.edge_count().into()]);
    let mut t = Table::new("io_average", &["key", "claimed", "computed", "difference", "agrees"]);
    let mut rows = Vec::new();
    for (key, claimed, computed) in
        [("io_i", cmp.claimed_io_i, cmp.computed_io_i), ("io_o", cmp.claimed_io_o, cmp.computed_io_o)]
    {
        let agrees = (claimed - computed).abs() <= EXTREMAL_TOL;
        t.push(vec![key.into(), claimed.into(), computed.into(), (claimed - computed).into(), agrees.into()]);
        rows.push(json!({ "key": key, "claimed": claimed, "computed": computed, "agrees": agrees }));
    }
    let json = json!({
        "n": built.graph.node_count(),
        "m": built.graph.edge_count(),
        "io_average": rows,
        "agrees": cmp.agrees(EXTREMAL_TOL),
    });
    if !cmp.agrees(EXTREMAL_TOL) {
        eprintln!("note: closed-form io averages differ from the computed values for these class sizes");
    }
    Ok(Document { meta, tables: vec![g, t], json })
}

pub fn features(input: &Input, labels: Option<&LabelFile>, out: Option<&Path>) -> anyhow::Result<()> {
    let g = &input.graph;
    let mut inputs = json!({ "edges": input.meta() });
    if let Some(l) = labels {
        inputs["labels"] = l.meta();
    }
    let meta = meta("features", inputs, json!({}));
    let mut buf = Vec::new();
    let summary = export_features(g, labels.map(|l| &l.labels), &mut buf)?;
    if !summary.unknown_label_tokens.is_empty() {
        eprintln!(
            "warning: {} label rows name no node in the graph",
            summary.unknown_label_tokens.len()
        );
    }
    match out {
        Some(p) => {
            write_out(Some(p), std::str::from_utf8(&buf)?)?;
            write_sidecar(p, &meta)
        }
        None => write_out(None, std::str::from_utf8(&buf)?),
    }
}
