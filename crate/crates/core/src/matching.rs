//! Maximum and minimum-cost maximum matchings on bipartite multigraphs.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap, VecDeque};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BipartiteEdge {
    /// Left endpoint, 1..=left_count.
    pub left: usize,
    /// Right endpoint, 1..=right_count.
    pub right: usize,
    pub cost: i64,
}

/// Bipartite multigraph. Vertex numbering is per side; edge ids are input positions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteGraph {
    left_count: usize,
    right_count: usize,
    edges: Vec<BipartiteEdge>,
}

impl BipartiteGraph {
    pub fn new(left_count: usize, right_count: usize) -> Self {
        BipartiteGraph { left_count, right_count, edges: Vec::new() }
    }

    pub fn from_edges(
        left_count: usize,
        right_count: usize,
        edges: impl IntoIterator<Item = (usize, usize, i64)>,
    ) -> Result<Self> {
        let mut g = BipartiteGraph::new(left_count, right_count);
        for (u, v, c) in edges {
            g.add_edge(u, v, c)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, left: usize, right: usize, cost: i64) -> Result<usize> {
        if left == 0 || left > self.left_count {
            return Err(Error::VertexOutOfRange { vertex: left, n: self.left_count });
        }
        if right == 0 || right > self.right_count {
            return Err(Error::VertexOutOfRange { vertex: right, n: self.right_count });
        }
        self.edges.push(BipartiteEdge { left, right, cost });
        Ok(self.edges.len() - 1)
    }

    pub fn left_count(&self) -> usize {
        self.left_count
    }

    pub fn right_count(&self) -> usize {
        self.right_count
    }

    /// Total vertex count over both sides.
    pub fn vertex_count(&self) -> usize {
        self.left_count + self.right_count
    }

    pub fn edges(&self) -> &[BipartiteEdge] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> BipartiteEdge {
        self.edges[id]
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Position of a left vertex in the unified 0-based vertex indexing.
    pub fn left_index(&self, u: usize) -> usize {
        u - 1
    }

    /// Position of a right vertex in the unified 0-based vertex indexing.
    pub fn right_index(&self, v: usize) -> usize {
        self.left_count + v - 1
    }

    pub fn check_costs(&self) -> Result<()> {
        match self.edges.iter().position(|e| e.cost < 0) {
            Some(id) => Err(Error::NegativeCost { id }),
            None => Ok(()),
        }
    }

    /// One representative edge per `(left, right)` pair: the cheapest, lowest id on ties.
    fn collapsed(&self) -> Vec<usize> {
        let mut best: HashMap<(usize, usize), usize> = HashMap::new();
        for (id, e) in self.edges.iter().enumerate() {
            best.entry((e.left, e.right))
                .and_modify(|b| {
                    if e.cost < self.edges[*b].cost {
                        *b = id;
                    }
                })
                .or_insert(id);
        }
        let mut ids: Vec<usize> = best.into_values().collect();
        ids.sort_unstable();
        ids
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    /// Member edge ids, ascending.
    pub edges: Vec<usize>,
    pub cost: i64,
}

impl Matching {
    /// Builds a matching from edge ids, checking endpoint disjointness.
    pub fn from_edges(g: &BipartiteGraph, mut ids: Vec<usize>) -> Result<Self> {
        ids.sort_unstable();
        let mut left = vec![false; g.left_count + 1];
        let mut right = vec![false; g.right_count + 1];
        let mut cost = 0i64;
        for &id in &ids {
            let e = g.edges.get(id).ok_or_else(|| Error::NotAMatching(format!("no edge {id}")))?;
            if std::mem::replace(&mut left[e.left], true) || std::mem::replace(&mut right[e.right], true) {
                return Err(Error::NotAMatching(format!("edge {id} shares an endpoint")));
            }
            cost += e.cost;
        }
        Ok(Matching { edges: ids, cost })
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, id: usize) -> bool {
        self.edges.binary_search(&id).is_ok()
    }

    /// Matched partner edge per left vertex (index 0 unused).
    pub fn left_mates(&self, g: &BipartiteGraph) -> Vec<Option<usize>> {
        let mut m = vec![None; g.left_count + 1];
        for &id in &self.edges {
            m[g.edges[id].left] = Some(id);
        }
        m
    }

    /// Matched partner edge per right vertex (index 0 unused).
    pub fn right_mates(&self, g: &BipartiteGraph) -> Vec<Option<usize>> {
        let mut m = vec![None; g.right_count + 1];
        for &id in &self.edges {
            m[g.edges[id].right] = Some(id);
        }
        m
    }
}

/// Maximum-cardinality matching by Hopcroft-Karp.
pub fn max_matching(g: &BipartiteGraph) -> Matching {
    const INF: usize = usize::MAX;
    let nl = g.left_count;
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); nl + 1];
    for id in g.collapsed() {
        let e = g.edges[id];
        adj[e.left].push((e.right, id));
    }
    // mate_l[u] = (right vertex, edge id); mate_r[v] = left vertex
    let mut mate_l: Vec<Option<(usize, usize)>> = vec![None; nl + 1];
    let mut mate_r: Vec<Option<usize>> = vec![None; g.right_count + 1];
    let mut dist = vec![INF; nl + 1];

    loop {
        // BFS layering from free left vertices.
        let mut queue = VecDeque::new();
        for u in 1..=nl {
            if mate_l[u].is_none() {
                dist[u] = 0;
                queue.push_back(u);
            } else {
                dist[u] = INF;
            }
        }
        let mut found = false;
        while let Some(u) = queue.pop_front() {
            for &(v, _) in &adj[u] {
                match mate_r[v] {
                    None => found = true,
                    Some(w) if dist[w] == INF => {
                        dist[w] = dist[u] + 1;
                        queue.push_back(w);
                    }
                    _ => {}
                }
            }
        }
        if !found {
            break;
        }
        let mut next = vec![0usize; nl + 1];
        for u in 1..=nl {
            if mate_l[u].is_none() {
                augment(u, &adj, &mut dist, &mut next, &mut mate_l, &mut mate_r);
            }
        }
    }

    let ids = mate_l.iter().flatten().map(|&(_, id)| id).collect();
    Matching::from_edges(g, ids).expect("augmenting paths keep the matching valid")
}

fn augment(
    u: usize,
    adj: &[Vec<(usize, usize)>],
    dist: &mut [usize],
    next: &mut [usize],
    mate_l: &mut [Option<(usize, usize)>],
    mate_r: &mut [Option<usize>],
) -> bool {
    while next[u] < adj[u].len() {
        let (v, id) = adj[u][next[u]];
        next[u] += 1;
        let ok = match mate_r[v] {
            None => true,
            Some(w) => dist[w] == dist[u] + 1 && augment(w, adj, dist, next, mate_l, mate_r),
        };
        if ok {
            mate_l[u] = Some((v, id));
            mate_r[v] = Some(u);
            return true;
        }
    }
    dist[u] = usize::MAX;
    false
}

/// Maximum-cardinality matching of least total cost.
///
/// Successive shortest augmenting paths with vertex potentials; every
/// augmentation follows a cheapest path, so each intermediate matching is
/// optimal for its size.
pub fn min_cost_max_matching(g: &BipartiteGraph) -> Result<Matching> {
    g.check_costs()?;
    let nl = g.left_count;
    let nr = g.right_count;
    // node layout: 0 source, 1..=nl left, nl+1..=nl+nr right, nl+nr+1 sink
    let source = 0;
    let sink = nl + nr + 1;
    let mut net = CostFlow::new(sink + 1);
    for u in 1..=nl {
        net.add(source, u, 0, None);
    }
    for v in 1..=nr {
        net.add(nl + v, sink, 0, None);
    }
    for id in g.collapsed() {
        let e = g.edges[id];
        net.add(e.left, nl + e.right, e.cost, Some(id));
    }
    net.run(source, sink);
    let ids = net
        .arcs
        .iter()
        .step_by(2)
        .filter(|a| a.cap == 0)
        .filter_map(|a| a.label)
        .collect();
    Matching::from_edges(g, ids)
}

#[derive(Debug, Clone)]
struct CostArc {
    to: usize,
    cap: i64,
    cost: i64,
    label: Option<usize>,
}

/// Unit-capacity min-cost flow on a graph with nonnegative costs.
struct CostFlow {
    n: usize,
    arcs: Vec<CostArc>,
    adj: Vec<Vec<usize>>,
}

impl CostFlow {
    fn new(n: usize) -> Self {
        CostFlow { n, arcs: Vec::new(), adj: vec![Vec::new(); n] }
    }

    fn add(&mut self, from: usize, to: usize, cost: i64, label: Option<usize>) {
        self.adj[from].push(self.arcs.len());
        self.arcs.push(CostArc { to, cap: 1, cost, label });
        self.adj[to].push(self.arcs.len());
        self.arcs.push(CostArc { to: from, cap: 0, cost: -cost, label: None });
    }

    fn run(&mut self, source: usize, sink: usize) {
        let mut potential = vec![0i64; self.n];
        loop {
            let mut dist = vec![i64::MAX; self.n];
            let mut via = vec![usize::MAX; self.n];
            let mut heap = BinaryHeap::new();
            dist[source] = 0;
            heap.push(Reverse((0i64, source)));
            while let Some(Reverse((d, v))) = heap.pop() {
                if d > dist[v] {
                    continue;
                }
                for &a in &self.adj[v] {
                    let arc = &self.arcs[a];
                    if arc.cap == 0 {
                        continue;
                    }
                    let nd = d + arc.cost + potential[v] - potential[arc.to];
                    if nd < dist[arc.to] {
                        dist[arc.to] = nd;
                        via[arc.to] = a;
                        heap.push(Reverse((nd, arc.to)));
                    }
                }
            }
            if dist[sink] == i64::MAX {
                return;
            }
            for v in 0..self.n {
                if dist[v] != i64::MAX {
                    potential[v] += dist[v];
                }
            }
            let mut v = sink;
            while v != source {
                let a = via[v];
                self.arcs[a].cap -= 1;
                self.arcs[a ^ 1].cap += 1;
                v = self.arcs[a ^ 1].to;
            }
        }
    }
}
