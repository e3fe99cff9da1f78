//! Shared graph representations and the primitive algorithms every classifier
//! builds on: disjoint sets, strongly connected components, bridges and
//! filtered reachability.
//!
//! Vertices are numbered from 1. Edge and arc ids are 0-based positions in the
//! input sequence, so parallel edges stay distinguishable.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// Membership of an element relative to a family of optimal structures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Category {
    /// In every optimal structure.
    Every,
    /// In at least one optimal structure but not in all of them.
    Sometimes,
    /// In no optimal structure.
    Never,
}

impl Category {
    pub fn as_str(&self) -> &'static str {
        match self {
            Category::Every => "EVERY",
            Category::Sometimes => "SOME",
            Category::Never => "NEVER",
        }
    }
}

impl fmt::Display for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    /// Scaled-integer cost; 0 when the graph carries no costs.
    pub cost: i64,
}

/// Undirected multigraph; loops and parallel edges are allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multigraph {
    n: usize,
    edges: Vec<Edge>,
}

impl Multigraph {
    pub fn new(n: usize) -> Self {
        Multigraph { n, edges: Vec::new() }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize, i64)>) -> Result<Self> {
        let mut g = Multigraph::new(n);
        for (u, v, cost) in edges {
            g.add_edge(u, v, cost)?;
        }
        Ok(g)
    }

    /// Appends an edge and returns its id.
    pub fn add_edge(&mut self, u: usize, v: usize, cost: i64) -> Result<usize> {
        check_vertex(u, self.n)?;
        check_vertex(v, self.n)?;
        self.edges.push(Edge { u, v, cost });
        Ok(self.edges.len() - 1)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> Edge {
        self.edges[id]
    }

    /// Same vertices and edge ids with every cost replaced.
    pub fn with_uniform_cost(&self, cost: i64) -> Multigraph {
        Multigraph {
            n: self.n,
            edges: self.edges.iter().map(|e| Edge { cost, ..*e }).collect(),
        }
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut dsu = Dsu::new(self.n);
        let mut parts = self.n;
        for e in &self.edges {
            if dsu.union_unchecked(e.u, e.v) {
                parts -= 1;
            }
        }
        parts == 1
    }

    /// Incidence lists of `(neighbor, edge id)`, indexed by vertex.
    fn incidence(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.n + 1];
        for (id, e) in self.edges.iter().enumerate() {
            adj[e.u].push((e.v, id));
            if e.u != e.v {
                adj[e.v].push((e.u, id));
            }
        }
        adj
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Arc {
    pub from: usize,
    pub to: usize,
    pub cost: i64,
    /// Id of the undirected edge that induced this arc, if any.
    pub origin: Option<usize>,
}

/// Directed multigraph. Costs may be negative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    arcs: Vec<Arc>,
}

impl Digraph {
    pub fn new(n: usize) -> Self {
        Digraph { n, arcs: Vec::new() }
    }

    pub fn from_arcs(n: usize, arcs: impl IntoIterator<Item = (usize, usize, i64)>) -> Result<Self> {
        let mut g = Digraph::new(n);
        for (from, to, cost) in arcs {
            g.add_arc(from, to, cost, None)?;
        }
        Ok(g)
    }

    pub fn add_arc(&mut self, from: usize, to: usize, cost: i64, origin: Option<usize>) -> Result<usize> {
        check_vertex(from, self.n)?;
        check_vertex(to, self.n)?;
        self.arcs.push(Arc { from, to, cost, origin });
        Ok(self.arcs.len() - 1)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn arc(&self, id: usize) -> Arc {
        self.arcs[id]
    }

    /// Out-lists (or in-lists when `reverse`) of `(neighbor, arc id)`.
    fn adjacency(&self, reverse: bool) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.n + 1];
        for (id, a) in self.arcs.iter().enumerate() {
            if reverse {
                adj[a.to].push((a.from, id));
            } else {
                adj[a.from].push((a.to, id));
            }
        }
        adj
    }
}

fn check_vertex(x: usize, n: usize) -> Result<()> {
    if x == 0 || x > n {
        Err(Error::VertexOutOfRange { vertex: x, n })
    } else {
        Ok(())
    }
}

/// Disjoint-set forest with path compression and union by size.
#[derive(Debug, Clone)]
pub struct Dsu {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl Dsu {
    pub fn new(n: usize) -> Self {
        Dsu {
            parent: (0..=n).collect(),
            size: vec![1; n + 1],
        }
    }

    pub fn len(&self) -> usize {
        self.parent.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn find(&mut self, x: usize) -> Result<usize> {
        check_vertex(x, self.len())?;
        Ok(self.find_unchecked(x))
    }

    /// Merges the components of `x` and `y`; false if they were already one.
    pub fn union(&mut self, x: usize, y: usize) -> Result<bool> {
        check_vertex(x, self.len())?;
        check_vertex(y, self.len())?;
        Ok(self.union_unchecked(x, y))
    }

    pub(crate) fn find_unchecked(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    pub(crate) fn union_unchecked(&mut self, x: usize, y: usize) -> bool {
        let (mut a, mut b) = (self.find_unchecked(x), self.find_unchecked(y));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        true
    }
}

/// Strongly connected components of a digraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Components {
    /// Component id per vertex; index 0 is unused.
    comp: Vec<usize>,
    count: usize,
}

impl Components {
    pub fn component(&self, v: usize) -> usize {
        self.comp[v]
    }

    pub fn count(&self) -> usize {
        self.count
    }

    pub fn same(&self, u: usize, v: usize) -> bool {
        self.comp[u] == self.comp[v]
    }
}

/// Tarjan's algorithm, iterative. Component ids are contiguous from 0 in
/// reverse topological order of the condensation.
pub fn scc(g: &Digraph) -> Components {
    scc_filtered(g, |_| true)
}

/// SCCs of the subgraph made of the arcs accepted by `keep`.
pub fn scc_filtered(g: &Digraph, keep: impl Fn(usize) -> bool) -> Components {
    const UNVISITED: usize = usize::MAX;
    let n = g.vertex_count();
    let adj = g.adjacency(false);
    let mut index = vec![UNVISITED; n + 1];
    let mut low = vec![0; n + 1];
    let mut on_stack = vec![false; n + 1];
    let mut comp = vec![UNVISITED; n + 1];
    let mut stack = Vec::new();
    let mut next_index = 0;
    let mut count = 0;
    // (vertex, position in its adjacency list)
    let mut call: Vec<(usize, usize)> = Vec::new();

    for root in 1..=n {
        if index[root] != UNVISITED {
            continue;
        }
        call.push((root, 0));
        index[root] = next_index;
        low[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(&mut (v, ref mut pos)) = call.last_mut() {
            if let Some(&(w, id)) = adj[v].get(*pos) {
                *pos += 1;
                if !keep(id) {
                    continue;
                }
                if index[w] == UNVISITED {
                    index[w] = next_index;
                    low[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            call.pop();
            if let Some(&(parent, _)) = call.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                while let Some(w) = stack.pop() {
                    on_stack[w] = false;
                    comp[w] = count;
                    if w == v {
                        break;
                    }
                }
                count += 1;
            }
        }
    }
    Components { comp, count }
}

/// Ids of the bridges of `g`. Loops and parallel edges are never bridges.
///
/// Lowlink DFS that skips the tree edge by id rather than by parent vertex,
/// which is what makes parallel edges count as back edges.
pub fn bridges(g: &Multigraph) -> Vec<usize> {
    const UNVISITED: usize = usize::MAX;
    let n = g.vertex_count();
    let adj = g.incidence();
    let mut disc = vec![UNVISITED; n + 1];
    let mut low = vec![0; n + 1];
    let mut timer = 0;
    let mut result = Vec::new();
    // (vertex, id of the tree edge used to enter it, position in incidence list)
    let mut call: Vec<(usize, Option<usize>, usize)> = Vec::new();

    for root in 1..=n {
        if disc[root] != UNVISITED {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        call.push((root, None, 0));
        while let Some(&mut (v, entry, ref mut pos)) = call.last_mut() {
            if let Some(&(w, id)) = adj[v].get(*pos) {
                *pos += 1;
                if Some(id) == entry {
                    continue;
                }
                if disc[w] == UNVISITED {
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    call.push((w, Some(id), 0));
                } else {
                    low[v] = low[v].min(disc[w]);
                }
                continue;
            }
            call.pop();
            if let (Some(&(parent, _, _)), Some(id)) = (call.last(), entry) {
                low[parent] = low[parent].min(low[v]);
                if low[v] > disc[parent] {
                    result.push(id);
                }
            }
        }
    }
    result.sort_unstable();
    result
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Reverse,
}

/// Breadth-first reachability from `sources` over arcs accepted by `keep`.
///
/// Returns a membership vector indexed by vertex (index 0 unused).
/// Sources are always included.
pub fn reachable(
    g: &Digraph,
    sources: &[usize],
    keep: impl Fn(usize) -> bool,
    direction: Direction,
) -> Vec<bool> {
    let adj = g.adjacency(direction == Direction::Reverse);
    let mut seen = vec![false; g.vertex_count() + 1];
    let mut queue = VecDeque::new();
    for &s in sources {
        if !seen[s] {
            seen[s] = true;
            queue.push_back(s);
        }
    }
    while let Some(v) = queue.pop_front() {
        for &(w, id) in &adj[v] {
            if !seen[w] && keep(id) {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    seen
}
