//! Edge and vertex classification against all maximum matchings, or all
//! minimum-cost maximum matchings, of a bipartite multigraph.
//!
//! One optimal matching `M` is computed, then two residual digraphs are built:
//! matched edges point right to left with cost `-c`, unmatched edges left to
//! right with cost `c`. The first digraph adds an auxiliary vertex S wired to
//! the left side, the second an auxiliary vertex T wired to the right side.
//! A graph edge belongs to some but not every optimal matching exactly when one
//! of its arcs lies on a zero-cost cycle; arcs through S or T mark vertices
//! that can change their matched status.

use crate::error::{Error, Result};
use crate::graph::{scc, scc_filtered, Category, Digraph};
use crate::matching::{max_matching, min_cost_max_matching, BipartiteGraph, Matching};

/// Which auxiliary vertex the residual digraph carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ResidualSide {
    /// S: arcs `S -> u` for unmatched left `u`, `v -> S` for matched left `v`.
    Left,
    /// T: arcs `v -> T` for unmatched right `v`, `T -> u` for matched right `u`.
    Right,
}

/// Categories for every edge (by id) and every vertex.
///
/// Vertices use the unified 0-based indexing of [`BipartiteGraph::left_index`]
/// and [`BipartiteGraph::right_index`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub edges: Vec<Category>,
    pub vertices: Vec<Category>,
}

impl Classification {
    pub fn left(&self, g: &BipartiteGraph, u: usize) -> Category {
        self.vertices[g.left_index(u)]
    }

    pub fn right(&self, g: &BipartiteGraph, v: usize) -> Category {
        self.vertices[g.right_index(v)]
    }
}

/// Vertex numbering of residual digraphs: left `u` is `u`, right `v` is
/// `left_count + v`, and the auxiliary vertex is last.
pub fn residual_vertex_left(_g: &BipartiteGraph, u: usize) -> usize {
    u
}

pub fn residual_vertex_right(g: &BipartiteGraph, v: usize) -> usize {
    g.left_count() + v
}

pub fn auxiliary_vertex(g: &BipartiteGraph) -> usize {
    g.vertex_count() + 1
}

/// Orients `g` by membership in `m` and attaches the auxiliary vertex.
///
/// Arcs from graph edges come first, in edge id order, and carry the edge id as
/// origin; auxiliary arcs follow with no origin. With `with_costs` false every
/// arc cost is 0.
pub fn build_residual(g: &BipartiteGraph, m: &Matching, side: ResidualSide, with_costs: bool) -> Result<Digraph> {
    let checked = Matching::from_edges(g, m.edges.clone())?;
    if checked.edges != m.edges {
        return Err(Error::NotAMatching("duplicate edge ids".into()));
    }
    let aux = auxiliary_vertex(g);
    let mut d = Digraph::new(aux);
    for (id, e) in g.edges().iter().enumerate() {
        let cost = if with_costs { e.cost } else { 0 };
        let (l, r) = (residual_vertex_left(g, e.left), residual_vertex_right(g, e.right));
        if m.contains(id) {
            d.add_arc(r, l, -cost, Some(id))?;
        } else {
            d.add_arc(l, r, cost, Some(id))?;
        }
    }
    match side {
        ResidualSide::Left => {
            let mates = m.left_mates(g);
            for u in 1..=g.left_count() {
                let x = residual_vertex_left(g, u);
                if mates[u].is_some() {
                    d.add_arc(x, aux, 0, None)?;
                } else {
                    d.add_arc(aux, x, 0, None)?;
                }
            }
        }
        ResidualSide::Right => {
            let mates = m.right_mates(g);
            for v in 1..=g.right_count() {
                let x = residual_vertex_right(g, v);
                if mates[v].is_some() {
                    d.add_arc(aux, x, 0, None)?;
                } else {
                    d.add_arc(x, aux, 0, None)?;
                }
            }
        }
    }
    Ok(d)
}

/// Ids of the arcs lying on at least one cycle of total cost exactly zero.
///
/// Potentials are Bellman-Ford distances from a virtual root joined to every
/// vertex by zero-cost arcs. Reduced costs are then nonnegative, every
/// zero-cost cycle uses only zero-reduced-cost arcs, and an arc is on such a
/// cycle iff its endpoints share a strongly connected component of the
/// zero-reduced-cost subgraph.
///
/// Fails with [`Error::MatchingNotOptimal`] if a negative cycle exists.
pub fn zero_cost_cycle_edges(g: &Digraph) -> Result<Vec<usize>> {
    let potential = potentials(g)?;
    let tight = |id: usize| {
        let a = g.arc(id);
        a.cost + potential[a.from] - potential[a.to] == 0
    };
    let comps = scc_filtered(g, tight);
    Ok((0..g.arc_count())
        .filter(|&id| tight(id) && comps.same(g.arc(id).from, g.arc(id).to))
        .collect())
}

/// Shortest distances from a virtual root (queue-based Bellman-Ford).
fn potentials(g: &Digraph) -> Result<Vec<i64>> {
    let n = g.vertex_count();
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for (id, a) in g.arcs().iter().enumerate() {
        out[a.from].push(id);
    }
    let mut dist = vec![0i64; n + 1];
    // Edges on the current shortest path to each vertex; n or more means a cycle.
    let mut hops = vec![0usize; n + 1];
    let mut in_queue = vec![true; n + 1];
    let mut queue: std::collections::VecDeque<usize> = (1..=n).collect();
    while let Some(v) = queue.pop_front() {
        in_queue[v] = false;
        for &id in &out[v] {
            let a = g.arc(id);
            let nd = dist[v] + a.cost;
            if nd < dist[a.to] {
                dist[a.to] = nd;
                hops[a.to] = hops[v] + 1;
                if hops[a.to] > n {
                    return Err(Error::MatchingNotOptimal);
                }
                if !in_queue[a.to] {
                    in_queue[a.to] = true;
                    queue.push_back(a.to);
                }
            }
        }
    }
    Ok(dist)
}

/// Zero-cost-cycle arcs (costed) or same-SCC arcs (cost-free) of a residual digraph.
fn cycle_arcs(d: &Digraph, with_costs: bool) -> Result<Vec<usize>> {
    if with_costs {
        zero_cost_cycle_edges(d)
    } else {
        let comps = scc(d);
        Ok((0..d.arc_count())
            .filter(|&id| comps.same(d.arc(id).from, d.arc(id).to))
            .collect())
    }
}

/// Classification against minimum-cost maximum matchings.
pub fn classify_weighted(g: &BipartiteGraph) -> Result<Classification> {
    let m = min_cost_max_matching(g)?;
    classify_with(g, &m, true)
}

/// Classification against maximum matchings; costs are ignored.
pub fn classify_unweighted(g: &BipartiteGraph) -> Classification {
    let m = max_matching(g);
    classify_with(g, &m, false).expect("cost-free residual digraphs have no negative cycles")
}

/// Classifies relative to a caller-supplied optimal matching `m`.
///
/// The result does not depend on which optimal matching is supplied. A
/// non-optimal `m` in the costed case is reported as
/// [`Error::MatchingNotOptimal`] when it shows up as a negative cycle.
pub fn classify_with(g: &BipartiteGraph, m: &Matching, with_costs: bool) -> Result<Classification> {
    if with_costs {
        g.check_costs()?;
    }
    let aux = auxiliary_vertex(g);
    let mut on_cycle = vec![false; g.edge_count()];
    let mut can_flip = vec![false; g.vertex_count() + 1];

    for side in [ResidualSide::Left, ResidualSide::Right] {
        let d = build_residual(g, m, side, with_costs)?;
        for id in cycle_arcs(&d, with_costs)? {
            let a = d.arc(id);
            match a.origin {
                Some(edge) => on_cycle[edge] = true,
                None => {
                    // Auxiliary arc: its graph-side endpoint can change matched status.
                    let x = if a.from == aux { a.to } else { a.from };
                    can_flip[x] = true;
                }
            }
        }
    }

    let edges = (0..g.edge_count())
        .map(|id| {
            if on_cycle[id] {
                Category::Sometimes
            } else if m.contains(id) {
                Category::Every
            } else {
                Category::Never
            }
        })
        .collect();

    let mut matched = vec![false; g.vertex_count() + 1];
    for &id in &m.edges {
        let e = g.edge(id);
        matched[residual_vertex_left(g, e.left)] = true;
        matched[residual_vertex_right(g, e.right)] = true;
    }
    let vertices = (1..=g.vertex_count())
        .map(|x| {
            if can_flip[x] {
                Category::Sometimes
            } else if matched[x] {
                Category::Every
            } else {
                Category::Never
            }
        })
        .collect();

    Ok(Classification { edges, vertices })
}

#[cfg(test)]
mod tests {
    use super::*;
    use Category::{Every, Never, Sometimes};

    fn bg(nl: usize, nr: usize, edges: &[(usize, usize, i64)]) -> BipartiteGraph {
        BipartiteGraph::from_edges(nl, nr, edges.iter().copied()).unwrap()
    }

    fn arc_list(d: &Digraph) -> Vec<(usize, usize, i64, Option<usize>)> {
        d.arcs().iter().map(|a| (a.from, a.to, a.cost, a.origin)).collect()
    }

    #[test]
    fn residual_single_matched_edge() {
        let g = bg(1, 1, &[(1, 1, 4)]);
        let m = Matching::from_edges(&g, vec![0]).unwrap();
        // left u1 = 1, right v1 = 2, aux = 3
        let d = build_residual(&g, &m, ResidualSide::Left, true).unwrap();
        assert_eq!(arc_list(&d), vec![(2, 1, -4, Some(0)), (1, 3, 0, None)]);
        let d = build_residual(&g, &m, ResidualSide::Right, true).unwrap();
        assert_eq!(arc_list(&d), vec![(2, 1, -4, Some(0)), (3, 2, 0, None)]);
    }

    #[test]
    fn residual_two_left_one_right() {
        let g = bg(2, 1, &[(1, 1, 0), (2, 1, 0)]);
        let m = Matching::from_edges(&g, vec![0]).unwrap();
        // u1=1, u2=2, v1=3, S=4
        let d = build_residual(&g, &m, ResidualSide::Left, false).unwrap();
        assert_eq!(
            arc_list(&d),
            vec![(3, 1, 0, Some(0)), (2, 3, 0, Some(1)), (1, 4, 0, None), (4, 2, 0, None)]
        );
    }

    #[test]
    fn residual_rejects_non_matching() {
        let g = bg(2, 1, &[(1, 1, 0), (2, 1, 0)]);
        let bad = Matching { edges: vec![0, 1], cost: 0 };
        assert!(build_residual(&g, &bad, ResidualSide::Left, false).is_err());
    }

    #[test]
    fn zero_cycle_examples() {
        let d = Digraph::from_arcs(2, [(1, 2, 1), (2, 1, -1)]).unwrap();
        assert_eq!(zero_cost_cycle_edges(&d).unwrap(), vec![0, 1]);
        let d = Digraph::from_arcs(2, [(1, 2, 1), (2, 1, -2)]).unwrap();
        assert_eq!(zero_cost_cycle_edges(&d), Err(Error::MatchingNotOptimal));
        let d = Digraph::from_arcs(2, [(1, 2, 1), (2, 1, 0)]).unwrap();
        assert!(zero_cost_cycle_edges(&d).unwrap().is_empty());
    }

    #[test]
    fn zero_cycle_ignores_positive_detour() {
        // 1->2->3->1 costs 0; the chord 1->3 (cost 5) is not on a zero cycle.
        let d = Digraph::from_arcs(3, [(1, 2, 2), (2, 3, -1), (3, 1, -1), (1, 3, 5)]).unwrap();
        assert_eq!(zero_cost_cycle_edges(&d).unwrap(), vec![0, 1, 2]);
    }

    #[test]
    fn weighted_examples() {
        let g = bg(2, 2, &[(1, 1, 1), (1, 2, 2), (2, 1, 2), (2, 2, 1)]);
        let c = classify_weighted(&g).unwrap();
        assert_eq!(c.edges, vec![Every, Never, Never, Every]);
        assert_eq!(c.vertices, vec![Every; 4]);

        let g = bg(2, 2, &[(1, 1, 3), (1, 2, 3), (2, 1, 3), (2, 2, 3)]);
        let c = classify_weighted(&g).unwrap();
        assert_eq!(c.edges, vec![Sometimes; 4]);
        assert_eq!(c.vertices, vec![Every; 4]);

        let g = bg(1, 1, &[(1, 1, 7)]);
        let c = classify_weighted(&g).unwrap();
        assert_eq!((c.edges, c.vertices), (vec![Every], vec![Every, Every]));
    }

    #[test]
    fn unweighted_examples() {
        let g = bg(2, 1, &[(1, 1, 0), (2, 1, 0)]);
        let c = classify_unweighted(&g);
        assert_eq!(c.edges, vec![Sometimes, Sometimes]);
        assert_eq!((c.left(&g, 1), c.left(&g, 2), c.right(&g, 1)), (Sometimes, Sometimes, Every));

        let g = bg(2, 2, &[(1, 1, 0), (1, 2, 0), (2, 2, 0)]);
        let c = classify_unweighted(&g);
        assert_eq!(c.edges, vec![Every, Never, Every]);
        assert_eq!(c.vertices, vec![Every; 4]);

        let g = bg(2, 3, &[]);
        let c = classify_unweighted(&g);
        assert!(c.edges.is_empty());
        assert_eq!(c.vertices, vec![Never; 5]);
    }

    #[test]
    fn parallel_edges_split_by_cost() {
        let g = bg(1, 1, &[(1, 1, 3), (1, 1, 1), (1, 1, 1)]);
        let c = classify_weighted(&g).unwrap();
        assert_eq!(c.edges, vec![Never, Sometimes, Sometimes]);
        assert_eq!(c.vertices, vec![Every, Every]);
        let c = classify_unweighted(&g);
        assert_eq!(c.edges, vec![Sometimes; 3]);
    }

    #[test]
    fn non_optimal_matching_detected() {
        let g = bg(2, 2, &[(1, 1, 1), (1, 2, 2), (2, 1, 2), (2, 2, 1)]);
        let worse = Matching::from_edges(&g, vec![1, 2]).unwrap();
        assert_eq!(classify_with(&g, &worse, true), Err(Error::MatchingNotOptimal));
    }

    #[test]
    fn choice_independence_on_tied_instance() {
        let g = bg(2, 2, &[(1, 1, 3), (1, 2, 3), (2, 1, 3), (2, 2, 3)]);
        let a = Matching::from_edges(&g, vec![0, 3]).unwrap();
        let b = Matching::from_edges(&g, vec![1, 2]).unwrap();
        assert_eq!(classify_with(&g, &a, true).unwrap(), classify_with(&g, &b, true).unwrap());
    }
}
