//! Exhaustive reference implementations for small instances.
//!
//! Nothing here shares code with the classifiers it checks; each answer is
//! obtained by enumerating every candidate structure. Size guards refuse
//! instances that would take too long.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::flow::FlowNetwork;
use crate::graph::{Category, Multigraph};
use crate::matching::{BipartiteGraph, Matching};
use crate::matching_classify::Classification;

pub const MAX_MATCHING_PRODUCT: usize = 20;
pub const MAX_MATCHING_EDGES: usize = 24;
pub const MAX_TREE_EDGES: usize = 12;
pub const MAX_FLOW_VERTICES: usize = 12;

/// Every maximum-cardinality matching, restricted to minimum cost when `weighted`.
pub fn enum_optimal_matchings(g: &BipartiteGraph, weighted: bool) -> Result<Vec<Matching>> {
    if g.left_count() * g.right_count() > MAX_MATCHING_PRODUCT || g.edge_count() > MAX_MATCHING_EDGES {
        return Err(Error::OracleGuard(format!(
            "matching oracle needs left*right <= {MAX_MATCHING_PRODUCT} and at most {MAX_MATCHING_EDGES} edges"
        )));
    }
    let mut all = Vec::new();
    let mut chosen = Vec::new();
    let mut used_left = vec![false; g.left_count() + 1];
    let mut used_right = vec![false; g.right_count() + 1];
    subsets(g, 0, &mut chosen, &mut used_left, &mut used_right, &mut all);

    let best_size = all.iter().map(Vec::len).max().unwrap_or(0);
    let mut family: Vec<Matching> = all
        .into_iter()
        .filter(|m| m.len() == best_size)
        .map(|ids| {
            let cost = ids.iter().map(|&id| g.edge(id).cost).sum();
            Matching { edges: ids, cost }
        })
        .collect();
    if weighted {
        let best_cost = family.iter().map(|m| m.cost).min().unwrap_or(0);
        family.retain(|m| m.cost == best_cost);
    }
    Ok(family)
}

fn subsets(
    g: &BipartiteGraph,
    next: usize,
    chosen: &mut Vec<usize>,
    used_left: &mut [bool],
    used_right: &mut [bool],
    out: &mut Vec<Vec<usize>>,
) {
    if next == g.edge_count() {
        out.push(chosen.clone());
        return;
    }
    subsets(g, next + 1, chosen, used_left, used_right, out);
    let e = g.edge(next);
    if !used_left[e.left] && !used_right[e.right] {
        used_left[e.left] = true;
        used_right[e.right] = true;
        chosen.push(next);
        subsets(g, next + 1, chosen, used_left, used_right, out);
        chosen.pop();
        used_left[e.left] = false;
        used_right[e.right] = false;
    }
}

/// Every minimum-weight spanning tree, as sorted edge-id lists.
pub fn enum_min_spanning_trees(g: &Multigraph) -> Result<Vec<Vec<usize>>> {
    if g.edge_count() > MAX_TREE_EDGES {
        return Err(Error::OracleGuard(format!("spanning-tree oracle needs at most {MAX_TREE_EDGES} edges")));
    }
    let n = g.vertex_count();
    let need = n.saturating_sub(1);
    let mut trees: Vec<(i64, Vec<usize>)> = Vec::new();
    for mask in 0u32..(1 << g.edge_count()) {
        if mask.count_ones() as usize != need {
            continue;
        }
        let ids: Vec<usize> = (0..g.edge_count()).filter(|&i| mask & (1 << i) != 0).collect();
        if spans(g, &ids) {
            trees.push((ids.iter().map(|&i| g.edge(i).cost).sum(), ids));
        }
    }
    if trees.is_empty() {
        return Err(Error::Disconnected);
    }
    let best = trees.iter().map(|t| t.0).min().unwrap_or(0);
    Ok(trees.into_iter().filter(|t| t.0 == best).map(|t| t.1).collect())
}

/// n-1 edges that reach every vertex from vertex 1 form a spanning tree.
fn spans(g: &Multigraph, ids: &[usize]) -> bool {
    let n = g.vertex_count();
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n + 1];
    seen[1] = true;
    let mut stack = vec![1];
    while let Some(v) = stack.pop() {
        for &i in ids {
            let e = g.edge(i);
            for (a, b) in [(e.u, e.v), (e.v, e.u)] {
                if a == v && !seen[b] {
                    seen[b] = true;
                    stack.push(b);
                }
            }
        }
    }
    seen[1..].iter().all(|&s| s)
}

/// Minimum cut capacity by enumerating every vertex set that holds all
/// sources and no sink. Equals the maximum flow value.
pub fn min_cut_value(net: &FlowNetwork) -> Result<i64> {
    let n = net.vertex_count();
    if n > MAX_FLOW_VERTICES {
        return Err(Error::OracleGuard(format!("flow oracle needs at most {MAX_FLOW_VERTICES} vertices")));
    }
    let mut best = i64::MAX;
    for mask in 0u32..(1 << n) {
        let inside = |v: usize| mask & (1 << (v - 1)) != 0;
        if !net.sources().iter().all(|&s| inside(s)) || net.sinks().iter().any(|&t| inside(t)) {
            continue;
        }
        let cut: i64 = net
            .arcs()
            .iter()
            .filter(|a| {
                let crosses = inside(a.u) && !inside(a.v);
                crosses || (!net.is_directed() && inside(a.v) && !inside(a.u))
            })
            .map(|a| a.cap)
            .sum();
        best = best.min(cut);
    }
    Ok(best)
}

/// Arcs whose unit capacity increase raises the maximum flow value.
pub fn flow_increment_oracle(net: &FlowNetwork) -> Result<Vec<usize>> {
    let base = min_cut_value(net)?;
    let mut out = Vec::new();
    for (id, a) in net.arcs().iter().enumerate() {
        if min_cut_value(&net.with_capacity(id, a.cap + 1))? > base {
            out.push(id);
        }
    }
    Ok(out)
}

/// EVERY / SOME / NEVER over `0..universe` from membership in `family`.
pub fn categorize(universe: usize, family: &[BTreeSet<usize>]) -> Result<Vec<Category>> {
    if family.is_empty() {
        return Err(Error::InvalidInput("empty family".into()));
    }
    Ok((0..universe)
        .map(|x| {
            let hits = family.iter().filter(|s| s.contains(&x)).count();
            if hits == family.len() {
                Category::Every
            } else if hits > 0 {
                Category::Sometimes
            } else {
                Category::Never
            }
        })
        .collect())
}

/// Edge categories by membership and vertex categories by coverage.
pub fn classification_from_enumeration(g: &BipartiteGraph, family: &[Matching]) -> Result<Classification> {
    let edge_sets: Vec<BTreeSet<usize>> = family.iter().map(|m| m.edges.iter().copied().collect()).collect();
    let vertex_sets: Vec<BTreeSet<usize>> = family
        .iter()
        .map(|m| {
            m.edges
                .iter()
                .flat_map(|&id| {
                    let e = g.edge(id);
                    [g.left_index(e.left), g.right_index(e.right)]
                })
                .collect()
        })
        .collect();
    Ok(Classification {
        edges: categorize(g.edge_count(), &edge_sets)?,
        vertices: categorize(g.vertex_count(), &vertex_sets)?,
    })
}

/// Oracle classification of a bipartite graph.
pub fn oracle_matching_classification(g: &BipartiteGraph, weighted: bool) -> Result<Classification> {
    classification_from_enumeration(g, &enum_optimal_matchings(g, weighted)?)
}

/// Oracle classification of multigraph edges against minimum spanning trees.
pub fn oracle_mst_classification(g: &Multigraph) -> Result<Vec<Category>> {
    let trees: Vec<BTreeSet<usize>> =
        enum_min_spanning_trees(g)?.into_iter().map(|t| t.into_iter().collect()).collect();
    categorize(g.edge_count(), &trees)
}

/// Classified element of a bipartite graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Element {
    Edge(usize),
    /// Unified 0-based vertex index.
    Vertex(usize),
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Edge(id) => write!(f, "edge {id}"),
            Element::Vertex(ix) => write!(f, "vertex #{ix}"),
        }
    }
}

impl Classification {
    pub fn to_map(&self) -> BTreeMap<Element, Category> {
        let edges = self.edges.iter().enumerate().map(|(i, &c)| (Element::Edge(i), c));
        let vertices = self.vertices.iter().enumerate().map(|(i, &c)| (Element::Vertex(i), c));
        edges.chain(vertices).collect()
    }
}

/// Map keyed by position.
pub fn indexed<V: Clone>(values: &[V]) -> BTreeMap<usize, V> {
    values.iter().cloned().enumerate().collect()
}

/// Membership map of an id set over `0..universe`.
pub fn membership(universe: usize, ids: &[usize]) -> BTreeMap<usize, bool> {
    (0..universe).map(|i| (i, ids.contains(&i))).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReport<K, V> {
    pub expected: BTreeMap<K, V>,
    pub actual: BTreeMap<K, V>,
    pub mismatches: Vec<(K, V, V)>,
}

impl<K, V> OracleReport<K, V> {
    pub fn is_match(&self) -> bool {
        self.mismatches.is_empty()
    }
}

impl<K: fmt::Display, V: fmt::Display> fmt::Display for OracleReport<K, V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} mismatch(es)", self.mismatches.len())?;
        for (k, expected, actual) in &self.mismatches {
            writeln!(f, "{k}: expected {expected}, got {actual}")?;
        }
        Ok(())
    }
}

/// Elementwise diff of two maps over the same keys.
pub fn compare<K: Ord + Clone, V: PartialEq + Clone>(
    expected: &BTreeMap<K, V>,
    actual: &BTreeMap<K, V>,
) -> Result<OracleReport<K, V>> {
    if expected.len() != actual.len() || !expected.keys().all(|k| actual.contains_key(k)) {
        return Err(Error::UniverseMismatch);
    }
    let mismatches = expected
        .iter()
        .filter(|(k, v)| actual[*k] != **v)
        .map(|(k, v)| (k.clone(), v.clone(), actual[k].clone()))
        .collect();
    Ok(OracleReport { expected: expected.clone(), actual: actual.clone(), mismatches })
}
