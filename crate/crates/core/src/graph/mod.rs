//! Weighted graphs, `r`-paths, pathless-leaf pruning and `r`-path suspensions.
//!
//! Vertex ids are 1-based and stable: pruning and taking induced subgraphs
//! keep the original ids, so a vertex `v` always corresponds to the variable
//! `X_v` of the ambient polynomial ring.

mod io;
mod suspension;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

pub use suspension::{detect_r_path_suspension, SuspensionWitness};

/// A finite simple undirected graph with positive integer edge weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedGraph {
    universe: usize,
    present: Vec<bool>,
    adjacency: Vec<BTreeSet<usize>>,
    weights: BTreeMap<(usize, usize), u64>,
}

fn key(i: usize, j: usize) -> (usize, usize) {
    if i < j {
        (i, j)
    } else {
        (j, i)
    }
}

impl WeightedGraph {
    /// The edgeless graph on vertices `1..=n`.
    pub fn empty(n: usize) -> Self {
        let mut present = vec![true; n + 1];
        present[0] = false;
        WeightedGraph {
            universe: n,
            present,
            adjacency: vec![BTreeSet::new(); n + 1],
            weights: BTreeMap::new(),
        }
    }

    /// Builds a graph on `1..=n` from `(i, j, weight)` triples.
    pub fn from_edges(n: usize, edges: &[(usize, usize, u64)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGraph(
                "a graph needs at least one vertex".into(),
            ));
        }
        let mut g = WeightedGraph::empty(n);
        for &(i, j, w) in edges {
            g.insert_edge(i, j, w)?;
        }
        Ok(g)
    }

    /// Complete graph on `1..=n` whose weights are supplied by `weight(i, j)` for `i < j`.
    pub fn complete(n: usize, mut weight: impl FnMut(usize, usize) -> u64) -> Result<Self> {
        let mut edges = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                edges.push((i, j, weight(i, j)));
            }
        }
        WeightedGraph::from_edges(n, &edges)
    }

    fn insert_edge(&mut self, i: usize, j: usize, w: u64) -> Result<()> {
        for v in [i, j] {
            if !self.contains_vertex(v) {
                return Err(Error::VertexOutOfRange { vertex: v });
            }
        }
        if i == j {
            return Err(Error::InvalidGraph(format!("loop at vertex {i}")));
        }
        if w == 0 {
            return Err(Error::InvalidGraph(format!("edge {i}-{j} has weight 0")));
        }
        if self.weights.insert(key(i, j), w).is_some() {
            return Err(Error::InvalidGraph(format!("duplicate edge {i}-{j}")));
        }
        self.adjacency[i].insert(j);
        self.adjacency[j].insert(i);
        Ok(())
    }

    /// Largest admissible vertex id; also the number of variables of the ambient ring.
    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        self.present.get(v).copied().unwrap_or(false)
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        (1..=self.universe).filter(|&v| self.present[v])
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices().count()
    }

    /// Edges as `(i, j, weight)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.weights.iter().map(|(&(i, j), &w)| (i, j, w))
    }

    pub fn edge_count(&self) -> usize {
        self.weights.len()
    }

    pub fn weight(&self, i: usize, j: usize) -> Option<u64> {
        self.weights.get(&key(i, j)).copied()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adjacency
            .get(v)
            .into_iter()
            .flat_map(|set| set.iter().copied())
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency.get(v).map_or(0, BTreeSet::len)
    }

    fn remove_vertex(&mut self, v: usize) {
        let nbrs = std::mem::take(&mut self.adjacency[v]);
        for u in nbrs {
            self.adjacency[u].remove(&v);
            self.weights.remove(&key(u, v));
        }
        self.present[v] = false;
    }

    fn require_vertex(&self, v: usize) -> Result<()> {
        if self.contains_vertex(v) {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v })
        }
    }

    fn is_connected(&self) -> bool {
        let Some(start) = self.vertices().next() else {
            return false;
        };
        let mut seen = BTreeSet::from([start]);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for u in self.neighbors(v) {
                if seen.insert(u) {
                    stack.push(u);
                }
            }
        }
        seen.len() == self.vertex_count()
    }
}

/// An `r`-path: `r + 1` distinct vertices, consecutive ones adjacent.
///
/// Stored in canonical orientation (first id smaller than last id), since a
/// path and its reversal give the same generator.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Path(Vec<usize>);

impl Path {
    /// Canonicalizes the orientation of `vertices`; does not check adjacency.
    pub fn new(mut vertices: Vec<usize>) -> Self {
        if vertices.first() > vertices.last() {
            vertices.reverse();
        }
        Path(vertices)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    /// Number of edges.
    pub fn length(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn reversed(&self) -> Vec<usize> {
        self.0.iter().rev().copied().collect()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(&v)
    }

    /// True when the vertices are distinct and consecutive ones are edges of `g`.
    pub fn is_path_of(&self, g: &WeightedGraph) -> bool {
        let distinct: BTreeSet<_> = self.0.iter().collect();
        distinct.len() == self.0.len()
            && self.0.iter().all(|&v| g.contains_vertex(v))
            && self.0.windows(2).all(|w| g.weight(w[0], w[1]).is_some())
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        f.write_str(&parts.join("-"))
    }
}

/// Every `r`-path of `g` exactly once up to reversal, sorted lexicographically.
///
/// # Panics
///
/// If `r == 0`.
pub fn enumerate_r_paths(g: &WeightedGraph, r: usize) -> Vec<Path> {
    assert!(r >= 1, "path length r must be at least 1");
    fn extend(
        g: &WeightedGraph,
        r: usize,
        walk: &mut Vec<usize>,
        on_walk: &mut Vec<bool>,
        out: &mut Vec<Path>,
    ) {
        if walk.len() == r + 1 {
            if walk[0] < walk[r] {
                out.push(Path(walk.clone()));
            }
            return;
        }
        let last = *walk.last().expect("walk is never empty");
        for u in g.neighbors(last) {
            if !on_walk[u] {
                on_walk[u] = true;
                walk.push(u);
                extend(g, r, walk, on_walk, out);
                walk.pop();
                on_walk[u] = false;
            }
        }
    }

    let mut out = Vec::new();
    let mut on_walk = vec![false; g.universe() + 1];
    for v in g.vertices() {
        let mut walk = vec![v];
        on_walk[v] = true;
        extend(g, r, &mut walk, &mut on_walk, &mut out);
        on_walk[v] = false;
    }
    // Starting vertices are visited in increasing order and neighbours are
    // sorted, so `out` is already lexicographic.
    debug_assert!(out.windows(2).all(|w| w[0] < w[1]));
    out
}

fn vertices_on_paths(g: &WeightedGraph, r: usize) -> BTreeSet<usize> {
    enumerate_r_paths(g, r)
        .iter()
        .flat_map(|p| p.vertices().iter().copied())
        .collect()
}

/// True iff `v` has degree one and lies on no `r`-path.
pub fn is_r_pathless_leaf(g: &WeightedGraph, v: usize, r: usize) -> Result<bool> {
    g.require_vertex(v)?;
    Ok(g.degree(v) == 1 && !vertices_on_paths(g, r).contains(&v))
}

/// Repeatedly removes the lowest-id `r`-pathless leaf until none remains.
///
/// Returns the pruned graph (original ids preserved) and the removal order.
pub fn prune_pathless_leaves(g: &WeightedGraph, r: usize) -> (WeightedGraph, Vec<usize>) {
    // Removing a pathless leaf never changes the set of r-paths, so the
    // vertices lying on some path can be computed once.
    let on_paths = vertices_on_paths(g, r);
    let mut h = g.clone();
    let mut removed = Vec::new();
    loop {
        let Some(v) = h
            .vertices()
            .find(|&v| h.degree(v) == 1 && !on_paths.contains(&v))
        else {
            break;
        };
        h.remove_vertex(v);
        removed.push(v);
    }
    (h, removed)
}

/// The weighted subgraph induced by `keep`, with original ids.
pub fn induced_subgraph(
    g: &WeightedGraph,
    keep: impl IntoIterator<Item = usize>,
) -> Result<WeightedGraph> {
    let keep: BTreeSet<usize> = keep.into_iter().collect();
    for &v in &keep {
        g.require_vertex(v)?;
    }
    let mut h = g.clone();
    let drop: Vec<usize> = g.vertices().filter(|v| !keep.contains(v)).collect();
    for v in drop {
        h.remove_vertex(v);
    }
    Ok(h)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphClass {
    Tree,
    Complete,
    Other,
}

/// Trees take precedence, so `K1` and `K2` classify as trees.
pub fn classify(g: &WeightedGraph) -> GraphClass {
    let n = g.vertex_count();
    if n == 0 {
        return GraphClass::Other;
    }
    if g.edge_count() + 1 == n && g.is_connected() {
        GraphClass::Tree
    } else if g.edge_count() == n * (n - 1) / 2 {
        GraphClass::Complete
    } else {
        GraphClass::Other
    }
}
