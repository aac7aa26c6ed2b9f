//! Simple directed graphs stored as sorted out- and in-adjacency arrays.

use std::borrow::Cow;
use std::collections::HashMap;
use std::io::{BufRead, Write};

use serde::Serialize;

use crate::direction::Direction;
use crate::error::{Error, Result};

/// Repairs applied while building a graph from raw edges.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct IngestWarnings {
    pub duplicates: usize,
    pub self_loops: usize,
}

impl IngestWarnings {
    pub fn is_clean(&self) -> bool {
        self.duplicates == 0 && self.self_loops == 0
    }
}

/// A graph read from an edge list, with the repairs that were needed.
#[derive(Debug, Clone)]
pub struct LoadedGraph {
    pub graph: DirectedGraph,
    pub warnings: IngestWarnings,
}

/// Simple directed graph: no self-loops, no parallel edges.
///
/// Both adjacency directions are kept in compressed sparse row form with
/// every neighbor list sorted, so membership tests are binary searches.
/// Reciprocated pairs `u -> v`, `v -> u` are two independent edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectedGraph {
    out_offsets: Vec<usize>,
    out_targets: Vec<u32>,
    in_offsets: Vec<usize>,
    in_sources: Vec<u32>,
    tokens: Option<Vec<String>>,
}

fn csr(n: usize, edges: &[(u32, u32)]) -> (Vec<usize>, Vec<u32>) {
    // `edges` must be sorted by (key, value).
    let mut offsets = vec![0usize; n + 1];
    for &(k, _) in edges {
        offsets[k as usize + 1] += 1;
    }
    for i in 0..n {
        offsets[i + 1] += offsets[i];
    }
    (offsets, edges.iter().map(|&(_, v)| v).collect())
}

impl DirectedGraph {
    /// Graph with `n` nodes and no edges.
    pub fn empty(n: usize) -> Self {
        DirectedGraph {
            out_offsets: vec![0; n + 1],
            out_targets: Vec::new(),
            in_offsets: vec![0; n + 1],
            in_sources: Vec::new(),
            tokens: None,
        }
    }

    /// Builds a graph on nodes `0..n`, dropping self-loops and duplicates.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Self::from_edges_counted(n, edges).map(|(g, _)| g)
    }

    /// Like [`DirectedGraph::from_edges`], also reporting how many edges were dropped.
    pub fn from_edges_counted<I>(n: usize, edges: I) -> Result<(Self, IngestWarnings)>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n > u32::MAX as usize {
            return Err(Error::InvalidArgument(format!("{n} nodes exceeds the u32 id space")));
        }
        let mut warnings = IngestWarnings::default();
        let mut list = Vec::new();
        for (u, v) in edges {
            for node in [u, v] {
                if node >= n {
                    return Err(Error::NodeOutOfRange { node, n });
                }
            }
            if u == v {
                warnings.self_loops += 1;
            } else {
                list.push((u as u32, v as u32));
            }
        }
        list.sort_unstable();
        let before = list.len();
        list.dedup();
        warnings.duplicates = before - list.len();

        let (out_offsets, out_targets) = csr(n, &list);
        let mut rev: Vec<(u32, u32)> = list.iter().map(|&(u, v)| (v, u)).collect();
        rev.sort_unstable();
        let (in_offsets, in_sources) = csr(n, &rev);
        Ok((
            DirectedGraph { out_offsets, out_targets, in_offsets, in_sources, tokens: None },
            warnings,
        ))
    }

    /// Attaches original node tokens (one per node).
    pub fn with_tokens(mut self, tokens: Vec<String>) -> Result<Self> {
        if tokens.len() != self.node_count() {
            return Err(Error::InvalidArgument(format!(
                "{} tokens for {} nodes",
                tokens.len(),
                self.node_count()
            )));
        }
        self.tokens = Some(tokens);
        Ok(self)
    }

    #[inline]
    pub fn node_count(&self) -> usize {
        self.out_offsets.len() - 1
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.out_targets.len()
    }

    /// Sorted neighbors of `u` in direction `d`: successors for `Out`,
    /// predecessors for `In`. Panics if `u` is out of range.
    #[inline]
    pub fn neighbors(&self, u: usize, d: Direction) -> &[u32] {
        match d {
            Direction::Out => &self.out_targets[self.out_offsets[u]..self.out_offsets[u + 1]],
            Direction::In => &self.in_sources[self.in_offsets[u]..self.in_offsets[u + 1]],
        }
    }

    #[inline]
    pub fn out_neighbors(&self, u: usize) -> &[u32] {
        self.neighbors(u, Direction::Out)
    }

    #[inline]
    pub fn in_neighbors(&self, u: usize) -> &[u32] {
        self.neighbors(u, Direction::In)
    }

    #[inline]
    pub(crate) fn deg(&self, u: usize, d: Direction) -> usize {
        self.neighbors(u, d).len()
    }

    fn check(&self, u: usize) -> Result<()> {
        if u < self.node_count() {
            Ok(())
        } else {
            Err(Error::NodeOutOfRange { node: u, n: self.node_count() })
        }
    }

    /// In- or out-degree of `u`.
    pub fn degree(&self, u: usize, d: Direction) -> Result<usize> {
        self.check(u)?;
        Ok(self.deg(u, d))
    }

    /// Whether the edge `u -> v` exists.
    pub fn has_edge(&self, u: usize, v: usize) -> Result<bool> {
        self.check(u)?;
        self.check(v)?;
        Ok(self.contains_edge(u, v))
    }

    /// Unchecked form of [`DirectedGraph::has_edge`]; panics on a bad `u`.
    #[inline]
    pub fn contains_edge(&self, u: usize, v: usize) -> bool {
        let (outs, ins) = (self.out_neighbors(u), self.in_neighbors(v));
        // search the shorter list
        if outs.len() <= ins.len() {
            outs.binary_search(&(v as u32)).is_ok()
        } else {
            ins.binary_search(&(u as u32)).is_ok()
        }
    }

    /// Number of neighbors `v` with both `u -> v` and `v -> u`.
    pub fn reciprocal_degree(&self, u: usize) -> Result<usize> {
        self.check(u)?;
        Ok(self.recip(u))
    }

    #[inline]
    pub(crate) fn recip(&self, u: usize) -> usize {
        sorted_intersection_len(self.out_neighbors(u), self.in_neighbors(u))
    }

    /// All edges in `(source, target)` lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.node_count())
            .flat_map(move |u| self.out_neighbors(u).iter().map(move |&v| (u, v as usize)))
    }

    /// `(in_degree, out_degree)` for every node.
    pub fn joint_degrees(&self) -> Vec<(usize, usize)> {
        (0..self.node_count())
            .map(|u| (self.deg(u, Direction::In), self.deg(u, Direction::Out)))
            .collect()
    }

    /// Original token of `u`, or its dense id when the graph has no tokens.
    pub fn token(&self, u: usize) -> Cow<'_, str> {
        match &self.tokens {
            Some(t) => Cow::Borrowed(&t[u]),
            None => Cow::Owned(u.to_string()),
        }
    }

    pub fn tokens(&self) -> Option<&[String]> {
        self.tokens.as_deref()
    }

    /// Dense id of a token.
    pub fn token_index(&self) -> HashMap<String, usize> {
        (0..self.node_count()).map(|u| (self.token(u).into_owned(), u)).collect()
    }

    /// Same edges with tokens dropped; used when comparing structure only.
    pub fn without_tokens(mut self) -> Self {
        self.tokens = None;
        self
    }

    /// Writes one `source target` line per edge, using node tokens.
    ///
    /// Isolated nodes are not representable in this format and are lost.
    pub fn write_edge_list<W: Write>(&self, mut w: W) -> Result<()> {
        for (u, v) in self.edges() {
            writeln!(w, "{} {}", self.token(u), self.token(v))?;
        }
        Ok(())
    }

    /// Writes the `dense_id,token` mapping as CSV with a header.
    pub fn write_id_map<W: Write>(&self, w: W) -> Result<()> {
        let mut out = csv::Writer::from_writer(w);
        out.write_record(["dense_id", "token"])?;
        for u in 0..self.node_count() {
            out.write_record([u.to_string(), self.token(u).into_owned()])?;
        }
        out.flush()?;
        Ok(())
    }
}

/// Size of the intersection of two sorted, duplicate-free slices.
#[inline]
pub(crate) fn sorted_intersection_len(a: &[u32], b: &[u32]) -> usize {
    let (mut i, mut j, mut count) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}

/// Reads a whitespace-separated edge list.
///
/// Each non-blank line that does not start with `#` must hold exactly two
/// tokens, `source destination`. Tokens become dense ids `0..n` in order of
/// first appearance; this includes tokens seen only on self-loop lines.
/// Self-loops and repeated edges are dropped and counted.
pub fn load_edge_list<R: BufRead>(source: R) -> Result<LoadedGraph> {
    let mut ids: HashMap<String, usize> = HashMap::new();
    let mut tokens: Vec<String> = Vec::new();
    let mut edges = Vec::new();
    let mut intern = |tok: &str| -> usize {
        if let Some(&id) = ids.get(tok) {
            return id;
        }
        let id = tokens.len();
        tokens.push(tok.to_owned());
        ids.insert(tok.to_owned(), id);
        id
    };

    for (idx, line) in source.lines().enumerate() {
        let line = line?;
        let trimmed = line.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = trimmed.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(Error::Parse { line: idx + 1, found: fields.len() });
        }
        let u = intern(fields[0]);
        let v = intern(fields[1]);
        edges.push((u, v));
    }

    let n = tokens.len();
    let (graph, warnings) = DirectedGraph::from_edges_counted(n, edges)?;
    Ok(LoadedGraph { graph: graph.with_tokens(tokens)?, warnings })
}

/// Reads an edge list from a string.
pub fn parse_edge_list(text: &str) -> Result<LoadedGraph> {
    load_edge_list(text.as_bytes())
}
