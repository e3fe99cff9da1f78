//! Edge classification against all minimum spanning trees.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{bridges, Category, Dsu, Multigraph};

/// Maximal run of equal-cost edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CostGroup {
    pub cost: i64,
    pub edges: Vec<usize>,
}

/// Edge ids grouped by cost, groups in increasing cost order.
pub fn cost_groups(g: &Multigraph) -> Vec<CostGroup> {
    let mut order: Vec<usize> = (0..g.edge_count()).collect();
    order.sort_by_key(|&id| (g.edge(id).cost, id));
    let mut groups: Vec<CostGroup> = Vec::new();
    for id in order {
        let cost = g.edge(id).cost;
        match groups.last_mut() {
            Some(last) if last.cost == cost => last.edges.push(id),
            _ => groups.push(CostGroup { cost, edges: vec![id] }),
        }
    }
    groups
}

/// Classifies every edge as in every, some or no minimum spanning tree.
///
/// Groups are processed in increasing cost. Each group is contracted through
/// the components of all strictly cheaper edges: an induced loop can never
/// enter a tree, an induced bridge must, and any other induced edge can be
/// swapped with another member of its cycle.
pub fn classify_mst_edges(g: &Multigraph) -> Result<Vec<Category>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut result = vec![Category::Never; g.edge_count()];
    let mut dsu = Dsu::new(g.vertex_count());

    for group in cost_groups(g) {
        // Compact ids for the touched representatives only.
        let mut index: HashMap<usize, usize> = HashMap::new();
        let mut induced = Vec::with_capacity(group.edges.len());
        for &id in &group.edges {
            let e = g.edge(id);
            let (a, b) = (dsu.find_unchecked(e.u), dsu.find_unchecked(e.v));
            let next = index.len();
            let a = *index.entry(a).or_insert(next + 1);
            let next = index.len();
            let b = *index.entry(b).or_insert(next + 1);
            induced.push((a, b));
        }
        let contracted = Multigraph::from_edges(index.len(), induced.iter().map(|&(a, b)| (a, b, 0)))
            .expect("compact ids are in range");
        let mut is_bridge = vec![false; induced.len()];
        for local in bridges(&contracted) {
            is_bridge[local] = true;
        }
        for (local, &id) in group.edges.iter().enumerate() {
            let (a, b) = induced[local];
            result[id] = if a == b {
                Category::Never
            } else if is_bridge[local] {
                Category::Every
            } else {
                Category::Sometimes
            };
        }
        for &id in &group.edges {
            let e = g.edge(id);
            dsu.union_unchecked(e.u, e.v);
        }
    }
    Ok(result)
}

/// Classification against all spanning trees, costs ignored.
pub fn classify_spanning_tree_edges(g: &Multigraph) -> Result<Vec<Category>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut result: Vec<Category> = g
        .edges()
        .iter()
        .map(|e| if e.u == e.v { Category::Never } else { Category::Sometimes })
        .collect();
    for id in bridges(g) {
        result[id] = Category::Every;
    }
    Ok(result)
}
