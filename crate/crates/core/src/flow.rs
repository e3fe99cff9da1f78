//! Maximum flow and upward-critical edges.
//!
//! An edge is upward critical when raising its capacity by one unit, all else
//! unchanged, raises the maximum flow value.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{reachable, Digraph, Direction};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FlowArc {
    pub u: usize,
    pub v: usize,
    pub cap: i64,
}

/// Flow network with source and sink sets. Undirected edges carry flow either
/// way up to their capacity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlowNetwork {
    n: usize,
    arcs: Vec<FlowArc>,
    sources: Vec<usize>,
    sinks: Vec<usize>,
    directed: bool,
}

impl FlowNetwork {
    pub fn new(
        n: usize,
        arcs: impl IntoIterator<Item = (usize, usize, i64)>,
        sources: Vec<usize>,
        sinks: Vec<usize>,
        directed: bool,
    ) -> Result<Self> {
        let in_range = |x: usize| {
            if x == 0 || x > n {
                Err(Error::VertexOutOfRange { vertex: x, n })
            } else {
                Ok(())
            }
        };
        let mut list = Vec::new();
        for (u, v, cap) in arcs {
            in_range(u)?;
            in_range(v)?;
            if cap < 0 {
                return Err(Error::InvalidInput(format!("arc {} has negative capacity", list.len())));
            }
            list.push(FlowArc { u, v, cap });
        }
        if sources.is_empty() || sinks.is_empty() {
            return Err(Error::InvalidInput("source and sink sets must be nonempty".into()));
        }
        for &x in sources.iter().chain(&sinks) {
            in_range(x)?;
        }
        if let Some(x) = sources.iter().find(|s| sinks.contains(s)) {
            return Err(Error::InvalidInput(format!("vertex {x} is both a source and a sink")));
        }
        let mut sources = sources;
        let mut sinks = sinks;
        sources.sort_unstable();
        sources.dedup();
        sinks.sort_unstable();
        sinks.dedup();
        Ok(FlowNetwork { n, arcs: list, sources, sinks, directed })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &[FlowArc] {
        &self.arcs
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn sources(&self) -> &[usize] {
        &self.sources
    }

    pub fn sinks(&self) -> &[usize] {
        &self.sinks
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    /// Copy with one capacity changed.
    pub fn with_capacity(&self, id: usize, cap: i64) -> FlowNetwork {
        let mut net = self.clone();
        net.arcs[id].cap = cap;
        net
    }

    /// Remaining capacity of arc `id` in its own direction and against it.
    fn residual(&self, id: usize, flow: i64) -> (i64, i64) {
        let cap = self.arcs[id].cap;
        if self.directed {
            (cap - flow, flow)
        } else {
            (cap - flow, cap + flow)
        }
    }
}

/// Flow per arc id and total value.
///
/// For undirected networks the flow is signed: positive means `u -> v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlowAssignment {
    pub flow: Vec<i64>,
    pub value: i64,
}

/// Checks capacity bounds, conservation at inner vertices, and that the value
/// equals the net outflow of the sources.
pub fn check_flow(net: &FlowNetwork, f: &FlowAssignment) -> std::result::Result<(), String> {
    if f.flow.len() != net.arc_count() {
        return Err("flow vector length differs from arc count".into());
    }
    let mut excess = vec![0i64; net.n + 1];
    for (id, (a, &x)) in net.arcs.iter().zip(&f.flow).enumerate() {
        let low = if net.directed { 0 } else { -a.cap };
        if x < low || x > a.cap {
            return Err(format!("arc {id} flow {x} outside [{low}, {}]", a.cap));
        }
        excess[a.u] -= x;
        excess[a.v] += x;
    }
    for v in 1..=net.n {
        if !net.sources.contains(&v) && !net.sinks.contains(&v) && excess[v] != 0 {
            return Err(format!("conservation violated at vertex {v}"));
        }
    }
    let outflow: i64 = net.sources.iter().map(|&s| -excess[s]).sum();
    if outflow != f.value {
        return Err(format!("value {} differs from source outflow {outflow}", f.value));
    }
    Ok(())
}

#[derive(Debug, Clone)]
struct Edge {
    to: usize,
    cap: i64,
}

/// Dinic's blocking-flow algorithm on an adjacency-array residual graph.
struct Dinic {
    edges: Vec<Edge>,
    adj: Vec<Vec<usize>>,
    level: Vec<usize>,
    next: Vec<usize>,
}

impl Dinic {
    fn new(n: usize) -> Self {
        Dinic { edges: Vec::new(), adj: vec![Vec::new(); n], level: vec![0; n], next: vec![0; n] }
    }

    /// Adds `from -> to` with capacity `cap` and the paired edge with `back`.
    fn add(&mut self, from: usize, to: usize, cap: i64, back: i64) -> usize {
        let id = self.edges.len();
        self.adj[from].push(id);
        self.edges.push(Edge { to, cap });
        self.adj[to].push(id + 1);
        self.edges.push(Edge { to: from, cap: back });
        id
    }

    fn bfs(&mut self, s: usize, t: usize) -> bool {
        self.level.fill(usize::MAX);
        self.level[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &e in &self.adj[v] {
                let Edge { to, cap } = self.edges[e];
                if cap > 0 && self.level[to] == usize::MAX {
                    self.level[to] = self.level[v] + 1;
                    queue.push_back(to);
                }
            }
        }
        self.level[t] != usize::MAX
    }

    fn dfs(&mut self, v: usize, t: usize, pushed: i64) -> i64 {
        if v == t {
            return pushed;
        }
        while self.next[v] < self.adj[v].len() {
            let e = self.adj[v][self.next[v]];
            let Edge { to, cap } = self.edges[e];
            if cap > 0 && self.level[to] == self.level[v] + 1 {
                let got = self.dfs(to, t, pushed.min(cap));
                if got > 0 {
                    self.edges[e].cap -= got;
                    self.edges[e ^ 1].cap += got;
                    return got;
                }
            }
            self.next[v] += 1;
        }
        0
    }

    fn run(&mut self, s: usize, t: usize) -> i64 {
        let mut total = 0;
        while self.bfs(s, t) {
            self.next.fill(0);
            loop {
                let got = self.dfs(s, t, i64::MAX);
                if got == 0 {
                    break;
                }
                total += got;
            }
        }
        total
    }
}

/// Maximum integral flow from the source set to the sink set.
///
/// Multiple terminals are joined through a virtual super-source and
/// super-sink whose arcs exceed the total capacity; those arcs are not reported.
pub fn max_flow(net: &FlowNetwork) -> FlowAssignment {
    let super_source = 0;
    let super_sink = net.n + 1;
    let total: i64 = net.arcs.iter().map(|a| a.cap).sum();
    let unbounded = total + 1;
    let mut d = Dinic::new(net.n + 2);
    let handles: Vec<usize> = net
        .arcs
        .iter()
        .map(|a| d.add(a.u, a.v, a.cap, if net.directed { 0 } else { a.cap }))
        .collect();
    for &s in &net.sources {
        d.add(super_source, s, unbounded, 0);
    }
    for &t in &net.sinks {
        d.add(t, super_sink, unbounded, 0);
    }
    let value = d.run(super_source, super_sink);
    let flow = handles
        .iter()
        .zip(&net.arcs)
        .map(|(&h, a)| a.cap - d.edges[h].cap)
        .collect();
    FlowAssignment { flow, value }
}

/// Reachability rule used to decide criticality.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CriticalMode {
    /// Searches follow only edges with spare capacity in their own direction
    /// and the test also requires the reverse reachabilities to fail.
    /// Sound, but can miss critical edges depending on the max flow found.
    Paper,
    /// Searches follow the full residual graph; exact.
    #[default]
    Residual,
}

/// Result of a criticality query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalEdges {
    /// Ids of upward-critical arcs (or edges), ascending.
    pub edges: Vec<usize>,
    pub flow: FlowAssignment,
}

/// Upward-critical arcs of a directed network.
pub fn upward_critical(net: &FlowNetwork, mode: CriticalMode) -> Result<CriticalEdges> {
    if !net.directed {
        return Err(Error::InvalidInput("network is undirected; use upward_critical_undirected".into()));
    }
    Ok(critical_edges(net, mode))
}

/// Upward-critical edges of an undirected network: an edge qualifies when
/// either of its two orientations does.
pub fn upward_critical_undirected(net: &FlowNetwork, mode: CriticalMode) -> Result<CriticalEdges> {
    if net.directed {
        return Err(Error::InvalidInput("network is directed; use upward_critical".into()));
    }
    Ok(critical_edges(net, mode))
}

fn critical_edges(net: &FlowNetwork, mode: CriticalMode) -> CriticalEdges {
    let flow = max_flow(net);
    let residual = |id: usize| net.residual(id, flow.flow[id]);

    // Arc 2i is edge i taken u -> v, arc 2i+1 is v -> u.
    let mut g = Digraph::new(net.n);
    for a in &net.arcs {
        g.add_arc(a.u, a.v, 0, None).expect("validated endpoints");
        g.add_arc(a.v, a.u, 0, None).expect("validated endpoints");
    }
    let traversable = |arc: usize| {
        let id = arc / 2;
        let (fwd, bwd) = residual(id);
        let forward = arc % 2 == 0;
        match mode {
            CriticalMode::Residual => (if forward { fwd } else { bwd }) > 0,
            // Only edges with f < cap, in their own direction when directed,
            // either way when undirected.
            CriticalMode::Paper => {
                let unsaturated = if net.directed { fwd > 0 } else { fwd > 0 && bwd > 0 };
                unsaturated && (forward || !net.directed)
            }
        }
    };
    let from_sources = reachable(&g, &net.sources, traversable, Direction::Forward);
    let to_sinks = reachable(&g, &net.sinks, traversable, Direction::Reverse);

    let qualifies = |tail: usize, head: usize, spare: i64| {
        let base = spare == 0 && from_sources[tail] && to_sinks[head];
        match mode {
            CriticalMode::Residual => base,
            CriticalMode::Paper => base && !from_sources[head] && !to_sinks[tail],
        }
    };
    let edges = net
        .arcs
        .iter()
        .enumerate()
        .filter(|&(id, a)| {
            let (fwd, bwd) = residual(id);
            qualifies(a.u, a.v, fwd) || (!net.directed && qualifies(a.v, a.u, bwd))
        })
        .map(|(id, _)| id)
        .collect();
    CriticalEdges { edges, flow }
}
