//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Runs without the libtest harness so the report is always printed.

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use netclass::flow::{upward_critical, upward_critical_undirected, CriticalMode, FlowNetwork};
use netclass::geometry::{
    balanced_arrangement, balanced_check, polygon_forward, polygon_reconstruct, triangle_from_median_closed,
    triangle_from_median_search, AxisStatus, BalancedInstance, BalancedOutcome, Point, PolygonInstance,
    TriangleInstance,
};
use netclass::decimal::Decimal;
use netclass::matching_classify::{classify_unweighted, classify_weighted};
use netclass::mst_classify::{classify_mst_edges, classify_spanning_tree_edges};
use netclass::oracle::{flow_increment_oracle, oracle_matching_classification, oracle_mst_classification};
use netclass::{BipartiteGraph, Multigraph};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

const SEED: u64 = 0x5eed;
const EPS: f64 = 1e-12;

struct Verdict {
    pass: bool,
    detail: String,
}

impl Verdict {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Verdict { pass, detail: detail.into() }
    }
}

fn random_bipartite(rng: &mut StdRng, max_cost: i64) -> BipartiteGraph {
    let (nl, nr) = (rng.gen_range(1..=4), rng.gen_range(1..=4));
    let m = rng.gen_range(0..=8);
    let edges: Vec<_> =
        (0..m).map(|_| (rng.gen_range(1..=nl), rng.gen_range(1..=nr), rng.gen_range(0..=max_cost))).collect();
    BipartiteGraph::from_edges(nl, nr, edges).unwrap()
}

fn matching_unweighted() -> Verdict {
    let start = Instant::now();
    let mut mismatches = 0;
    let mut total = 0;
    let pairs: Vec<(usize, usize)> = (1..=3).flat_map(|u| (1..=3).map(move |v| (u, v))).collect();
    for mask in 0u32..(1 << pairs.len()) {
        if mask.count_ones() > 6 {
            continue;
        }
        let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &(u, v))| (u, v, 0));
        let g = BipartiteGraph::from_edges(3, 3, edges).unwrap();
        total += 1;
        if classify_unweighted(&g) != oracle_matching_classification(&g, false).unwrap() {
            mismatches += 1;
        }
    }
    let exhaustive = total;
    let mut rng = StdRng::seed_from_u64(SEED);
    for _ in 0..500 {
        let g = random_bipartite(&mut rng, 0);
        total += 1;
        if classify_unweighted(&g) != oracle_matching_classification(&g, false).unwrap() {
            mismatches += 1;
        }
    }
    let elapsed = start.elapsed();
    Verdict::new(
        mismatches == 0 && exhaustive == 466 && elapsed < Duration::from_secs(60),
        format!("{total} graphs ({exhaustive} exhaustive), {mismatches} mismatches, {:.2}s", elapsed.as_secs_f64()),
    )
}

fn matching_weighted() -> Verdict {
    let mut rng = StdRng::seed_from_u64(SEED + 1);
    let mut mismatches = 0;
    for _ in 0..500 {
        let g = random_bipartite(&mut rng, 3);
        if classify_weighted(&g).unwrap() != oracle_matching_classification(&g, true).unwrap() {
            mismatches += 1;
        }
    }
    Verdict::new(mismatches == 0, format!("500 graphs, {mismatches} mismatches"))
}

/// Random spanning tree plus extra edges, loops and parallels included.
fn random_connected(rng: &mut StdRng, n: usize, m: usize, max_cost: i64) -> Multigraph {
    let mut g = Multigraph::new(n);
    for v in 2..=n {
        g.add_edge(rng.gen_range(1..v), v, rng.gen_range(1..=max_cost)).unwrap();
    }
    while g.edge_count() < m {
        g.add_edge(rng.gen_range(1..=n), rng.gen_range(1..=n), rng.gen_range(1..=max_cost)).unwrap();
    }
    g
}

fn mst() -> Verdict {
    let mut rng = StdRng::seed_from_u64(SEED + 2);
    let (mut mismatches, mut uniform_mismatches, mut loops, mut parallels) = (0, 0, 0, 0);
    for _ in 0..500 {
        let n = rng.gen_range(1..=6);
        let m = rng.gen_range(n - 1..=10);
        let g = random_connected(&mut rng, n, m, 4);
        loops += g.edges().iter().filter(|e| e.u == e.v).count();
        let pairs: BTreeSet<(usize, usize)> = g.edges().iter().map(|e| (e.u.min(e.v), e.u.max(e.v))).collect();
        parallels += g.edge_count() - pairs.len();
        if classify_mst_edges(&g).unwrap() != oracle_mst_classification(&g).unwrap() {
            mismatches += 1;
        }
        if classify_spanning_tree_edges(&g).unwrap() != classify_mst_edges(&g.with_uniform_cost(1)).unwrap() {
            uniform_mismatches += 1;
        }
    }
    Verdict::new(
        mismatches == 0 && uniform_mismatches == 0 && loops > 0 && parallels > 0,
        format!(
            "500 multigraphs ({loops} loops, {parallels} parallel edges), {mismatches} oracle mismatches, \
             {uniform_mismatches} uniform-cost mismatches"
        ),
    )
}

fn random_network(rng: &mut StdRng, directed: bool) -> FlowNetwork {
    let n = rng.gen_range(2..=7);
    let m = rng.gen_range(0..=12);
    let arcs: Vec<_> = (0..m).map(|_| (rng.gen_range(1..=n), rng.gen_range(1..=n), rng.gen_range(1..=4))).collect();
    let split = rng.gen_range(1..n);
    let sources: Vec<usize> = (1..=split.min(2)).collect();
    let sinks: Vec<usize> = if n - split >= 3 { vec![n - 1, n] } else { vec![n] };
    FlowNetwork::new(n, arcs, sources, sinks, directed).unwrap()
}

#[derive(Default)]
struct FlowTally {
    instances: usize,
    residual_mismatches: usize,
    paper_unsound: usize,
    paper_exact: usize,
}

impl FlowTally {
    fn check(&mut self, net: &FlowNetwork) {
        let (residual, paper) = if net.is_directed() {
            (upward_critical(net, CriticalMode::Residual), upward_critical(net, CriticalMode::Paper))
        } else {
            (upward_critical_undirected(net, CriticalMode::Residual), upward_critical_undirected(net, CriticalMode::Paper))
        };
        let (residual, paper) = (residual.unwrap().edges, paper.unwrap().edges);
        let oracle = flow_increment_oracle(net).unwrap();
        self.instances += 1;
        self.residual_mismatches += usize::from(residual != oracle);
        self.paper_unsound += usize::from(!paper.iter().all(|id| oracle.contains(id)));
        self.paper_exact += usize::from(paper == oracle);
    }
}

fn flow() -> Verdict {
    let mut rng = StdRng::seed_from_u64(SEED + 3);
    let mut tally = FlowTally::default();
    let six = FlowNetwork::new(
        6,
        [(1, 2, 2), (2, 3, 2), (3, 4, 1), (3, 5, 1), (4, 6, 2), (5, 6, 1), (1, 5, 1)],
        vec![1],
        vec![6],
        true,
    )
    .unwrap();
    tally.check(&six);
    let reverse_route = FlowNetwork::new(
        7,
        [(1, 2, 1), (2, 3, 1), (3, 4, 1), (1, 3, 1), (2, 5, 1), (1, 7, 1), (7, 5, 1), (5, 6, 1), (6, 4, 2)],
        vec![1],
        vec![4],
        true,
    )
    .unwrap();
    tally.check(&reverse_route);
    for _ in 0..500 {
        tally.check(&random_network(&mut rng, true));
    }
    for _ in 0..200 {
        tally.check(&random_network(&mut rng, false));
    }
    let FlowTally { instances, residual_mismatches, paper_unsound, paper_exact } = tally;
    Verdict::new(
        residual_mismatches == 0 && paper_unsound == 0,
        format!(
            "{instances} networks incl. 2 named cases, residual mismatches {residual_mismatches}, \
             paper unsound {paper_unsound}, paper exact {paper_exact}/{instances} ({:.1}%)",
            100.0 * paper_exact as f64 / instances as f64
        ),
    )
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let value = f();
    (value, start.elapsed())
}

fn complexity() -> Verdict {
    let mut rng = StdRng::seed_from_u64(SEED + 4);

    let mut k = BipartiteGraph::new(150, 150);
    for u in 1..=150 {
        for v in 1..=150 {
            k.add_edge(u, v, rng.gen_range(0..=1000)).unwrap();
        }
    }
    let (c, t_matching) = timed(|| classify_weighted(&k).unwrap());
    assert_eq!(c.edges.len(), 22_500);

    let g = random_connected(&mut rng, 10_000, 100_000, 1000);
    let (cats, t_mst) = timed(|| classify_mst_edges(&g).unwrap());
    assert_eq!(cats.len(), 100_000);

    let n = 1000;
    let arcs: Vec<_> = (0..10_000).map(|_| (rng.gen_range(1..=n), rng.gen_range(1..=n), 1)).collect();
    let net = FlowNetwork::new(n, arcs, vec![1], vec![n], true).unwrap();
    let (_, t_flow) = timed(|| upward_critical(&net, CriticalMode::Residual).unwrap());

    Verdict::new(
        t_matching <= Duration::from_secs(30) && t_mst <= Duration::from_secs(10) && t_flow <= Duration::from_secs(10),
        format!(
            "K150,150 weighted {:.2}s (limit 30), MST n=1e4 m=1e5 {:.2}s (limit 10), flow n=1e3 m=1e4 {:.2}s (limit 10)",
            t_matching.as_secs_f64(),
            t_mst.as_secs_f64(),
            t_flow.as_secs_f64()
        ),
    )
}

fn weight(rng: &mut StdRng) -> Decimal {
    Decimal::new(rng.gen_range(1..=100_000), 3)
}

fn solved(inst: &BalancedInstance) -> Option<Vec<Point>> {
    match balanced_arrangement(inst) {
        BalancedOutcome::Points(p) => Some(p),
        BalancedOutcome::NoSolution => None,
    }
}

fn geometry() -> Verdict {
    let mut rng = StdRng::seed_from_u64(SEED + 5);
    let mut failures = Vec::new();

    let mut balanced_fail = [0; 3];
    for _ in 0..1000 {
        let (a, b) = (weight(&mut rng), weight(&mut rng));
        let three = BalancedInstance::new(vec![a, b, b]).unwrap();
        let parallel = BalancedInstance::new(vec![a, a, b, b]).unwrap();
        // w1 + w2 = 2 * w4
        let (p, q) = (rng.gen_range(1i128..=100_000), rng.gen_range(1i128..=100_000));
        let w4 = Decimal::new(p + q, 4);
        let bisected = BalancedInstance::new(vec![Decimal::new(2 * p, 4), Decimal::new(2 * q, 4), w4, w4]).unwrap();
        for (i, inst) in [three, parallel, bisected].iter().enumerate() {
            let ok = solved(inst).is_some_and(|pts| balanced_check(&pts, &inst.weights_f64(), 1e-6));
            balanced_fail[i] += usize::from(!ok);
        }
    }
    if balanced_fail != [0; 3] {
        failures.push(format!("balanced check failures {balanced_fail:?}"));
    }

    let mut unsolvable_wrong = 0;
    let mut nonconforming = 0;
    while nonconforming < 1000 {
        let (w1, w2, w4) = (weight(&mut rng), weight(&mut rng), weight(&mut rng));
        if w1 == w2 || w1.checked_add(&w2) == w4.checked_mul_int(2) {
            continue;
        }
        nonconforming += 1;
        let inst = BalancedInstance::new(vec![w1, w2, w4, w4]).unwrap();
        unsolvable_wrong += usize::from(solved(&inst).is_some());
    }
    for _ in 0..1000 {
        let n = rng.gen_range(5..=12);
        let mut w: Vec<Decimal> = (0..n - 1).map(|_| weight(&mut rng)).collect();
        w.push(w[n - 2]);
        unsolvable_wrong += usize::from(solved(&BalancedInstance::new(w).unwrap()).is_some());
    }
    if unsolvable_wrong > 0 {
        failures.push(format!("{unsolvable_wrong} unsolvable inputs got points"));
    }

    let mut worst = 0.0f64;
    let mut with_zero = 0;
    for _ in 0..1000 {
        let n = rng.gen_range(3..=50);
        let v: Vec<Point> =
            (0..n).map(|_| Point::new(rng.gen_range(-100.0..100.0), rng.gen_range(-100.0..100.0))).collect();
        let t: Vec<f64> = (0..n)
            .map(|_| {
                if rng.gen_bool(0.1) {
                    0.0
                } else {
                    rng.gen_range(1e-3..2.0) * if rng.gen_bool(0.5) { -1.0 } else { 1.0 }
                }
            })
            .collect();
        with_zero += usize::from(t.contains(&0.0));
        let inst = PolygonInstance::new(polygon_forward(&v, &t), t).unwrap();
        let r = polygon_reconstruct(&inst);
        let err = match (r.x_status, r.y_status, r.vertices) {
            (AxisStatus::Unique, AxisStatus::Unique, Some(got)) => {
                let scale = v.iter().map(|p| p.x.abs().max(p.y.abs())).fold(1.0, f64::max);
                got.iter().zip(&v).map(|(p, q)| (p.x - q.x).abs().max((p.y - q.y).abs())).fold(0.0, f64::max) / scale
            }
            _ => f64::INFINITY,
        };
        worst = worst.max(err);
    }
    if worst > 1e-6 {
        failures.push(format!("polygon max relative error {worst:e}"));
    }

    let mut disagreements = 0;
    let mut rejection_mismatch = 0;
    let mut rejected = 0;
    for _ in 0..1000 {
        let a = Point::new(rng.gen_range(-10.0..10.0), rng.gen_range(0.1..10.0));
        let (b, c) = (Point::new(0.0, 0.0), Point::new(rng.gen_range(0.5..10.0), 0.0));
        let inst = TriangleInstance::new(a.distance(&c), a.distance(&b), a.distance(&b.midpoint(&c))).unwrap();
        match (triangle_from_median_closed(&inst), triangle_from_median_search(&inst, EPS, EPS)) {
            (Ok(x), Ok(y)) => {
                let diff = [(x.a, y.a), (x.b, y.b), (x.c, y.c)]
                    .iter()
                    .map(|(p, q)| (p.x - q.x).abs().max((p.y - q.y).abs()))
                    .fold(0.0, f64::max);
                disagreements += usize::from(diff > 1e-5);
            }
            _ => disagreements += 1,
        }
    }
    for _ in 0..1000 {
        let inst =
            TriangleInstance::new(rng.gen_range(0.1..10.0), rng.gen_range(0.1..10.0), rng.gen_range(0.1..10.0)).unwrap();
        let closed = triangle_from_median_closed(&inst).is_ok();
        let search = triangle_from_median_search(&inst, EPS, EPS).is_ok();
        rejected += usize::from(!closed);
        rejection_mismatch += usize::from(closed != search);
    }
    if disagreements > 0 || rejection_mismatch > 0 {
        failures.push(format!("triangle disagreements {disagreements}, rejection mismatches {rejection_mismatch}"));
    }

    let summary = format!(
        "balanced 3x1000 ok, 2000 unsolvable, polygon max rel err {worst:.2e} ({with_zero} with t=0), \
         triangle 1000 agree, {rejected}/1000 random rejected by both"
    );
    if failures.is_empty() {
        Verdict::new(true, summary)
    } else {
        Verdict::new(false, failures.join("; "))
    }
}

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn cli_golden() -> Verdict {
    let manifest = std::fs::read_to_string(data("golden/cases.txt")).unwrap();
    let mut failures = Vec::new();
    let mut codes = BTreeSet::new();
    let mut commands = BTreeSet::new();
    let mut total = 0;
    for line in manifest.lines().filter(|l| !l.starts_with('#') && !l.trim().is_empty()) {
        let parts: Vec<&str> = line.split('|').map(str::trim).collect();
        let (name, want_code, args) = (parts[0], parts[1].parse::<i32>().unwrap(), parts[2]);
        let argv: Vec<String> = std::iter::once("netclass".to_string())
            .chain(args.split_whitespace().map(|a| match a.strip_prefix('@') {
                Some(f) => data(f).to_string_lossy().into_owned(),
                None => a.to_string(),
            }))
            .collect();
        commands.insert(argv[1].clone());
        let want = std::fs::read_to_string(data(&format!("golden/{name}.out"))).unwrap();
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = netclass_cli::run(argv, &mut out, &mut err);
        total += 1;
        codes.insert(code);
        if code != want_code || out != want.as_bytes() {
            failures.push(name.to_string());
        }
    }
    // input errors carry exit code 2
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let bad = data("bad_header.txt");
    let code = netclass_cli::run(["netclass", "classify-matching", bad.to_str().unwrap()], &mut out, &mut err);
    total += 1;
    codes.insert(code);
    if code != 2 || !String::from_utf8_lossy(&err).starts_with("error: line 2:") {
        failures.push("bad_header".into());
    }
    Verdict::new(
        failures.is_empty() && codes == BTreeSet::from([0, 1, 2, 3]) && commands.len() == 6,
        format!(
            "{total} cases over {} subcommands, exit codes {codes:?}, failures {failures:?}",
            commands.len()
        ),
    )
}

fn main() {
    let criteria: [(&str, fn() -> Verdict); 7] = [
        ("unweighted matching classification vs enumeration", matching_unweighted),
        ("weighted matching classification vs enumeration", matching_weighted),
        ("MST classification vs spanning-tree enumeration", mst),
        ("flow criticality vs increment oracle", flow),
        ("complexity smoke", complexity),
        ("geometry", geometry),
        ("CLI golden files", cli_golden),
    ];
    let mut all = true;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let v = check();
        all &= v.pass;
        println!("criterion {}: {} {name}: {}", i + 1, if v.pass { "PASS" } else { "FAIL" }, v.detail);
    }
    if !all {
        std::process::exit(1);
    }
}
