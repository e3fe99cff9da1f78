//! Polygon recovery from one point per edge.
//!
//! Point `p(i)` lies on the support line of edge `(i, i+1)` at
//! `(1 - t(i)) * V(i) + t(i) * V(i+1)`. Each axis is solved on its own: every
//! coordinate is a linear function of one unknown coordinate, propagated
//! along the cycle with factor `(t - 1) / t` per edge, and the closing
//! equation fixes (or fails to fix) the unknown. Ratios equal to zero pin a
//! vertex directly and cut the cycle into independent chains.

use std::fmt;

use super::Point;
use crate::error::{Error, Result};

/// Ratios with absolute value below this are treated as exactly zero.
pub const ZERO_RATIO: f64 = 1e-12;
/// Relative tolerance for deciding that a closing equation is singular.
const SINGULAR: f64 = 1e-12;
/// Relative tolerance for deciding that a singular equation is consistent.
const CONSISTENT: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct PolygonInstance {
    points: Vec<Point>,
    ratios: Vec<f64>,
}

impl PolygonInstance {
    pub fn new(points: Vec<Point>, ratios: Vec<f64>) -> Result<Self> {
        if points.len() != ratios.len() {
            return Err(Error::InvalidInput(format!(
                "{} points but {} ratios",
                points.len(),
                ratios.len()
            )));
        }
        if points.len() < 3 {
            return Err(Error::InvalidInput("a polygon needs at least 3 vertices".into()));
        }
        let finite = points.iter().all(|p| p.x.is_finite() && p.y.is_finite()) && ratios.iter().all(|t| t.is_finite());
        if !finite {
            return Err(Error::InvalidInput("coordinates and ratios must be finite".into()));
        }
        Ok(PolygonInstance { points, ratios })
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn ratios(&self) -> &[f64] {
        &self.ratios
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AxisStatus {
    /// Exactly one solution.
    Unique,
    /// Infinitely many; the reported vertices use anchor coordinate 0.
    Free,
    /// No solution.
    NoSolution,
}

impl fmt::Display for AxisStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AxisStatus::Unique => "UNIQUE",
            AxisStatus::Free => "FREE",
            AxisStatus::NoSolution => "NONE",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Reconstruction {
    pub x_status: AxisStatus,
    pub y_status: AxisStatus,
    /// Absent when either axis has no solution.
    pub vertices: Option<Vec<Point>>,
    pub warnings: Vec<String>,
}

/// Ratio points of a polygon, indices cyclic.
pub fn polygon_forward(vertices: &[Point], ratios: &[f64]) -> Vec<Point> {
    let n = vertices.len();
    (0..n)
        .map(|i| {
            let (a, b, t) = (vertices[i], vertices[(i + 1) % n], ratios[i]);
            Point::new((1.0 - t) * a.x + t * b.x, (1.0 - t) * a.y + t * b.y)
        })
        .collect()
}

pub fn polygon_reconstruct(inst: &PolygonInstance) -> Reconstruction {
    let mut warnings = Vec::new();
    let ratios: Vec<f64> = inst
        .ratios
        .iter()
        .enumerate()
        .map(|(i, &t)| {
            if t != 0.0 && t.abs() < ZERO_RATIO {
                warnings.push(format!("t({}) = {t:e} treated as 0", i + 1));
                0.0
            } else {
                t
            }
        })
        .collect();
    let xs: Vec<f64> = inst.points.iter().map(|p| p.x).collect();
    let ys: Vec<f64> = inst.points.iter().map(|p| p.y).collect();
    let (x_status, x) = solve_axis(&xs, &ratios);
    let (y_status, y) = solve_axis(&ys, &ratios);
    let vertices = match (x, y) {
        (Some(x), Some(y)) => Some(x.into_iter().zip(y).map(|(x, y)| Point::new(x, y)).collect()),
        _ => None,
    };
    Reconstruction { x_status, y_status, vertices, warnings }
}

/// One step `x(to) = factor * x(from) + offset`.
#[derive(Debug, Clone, Copy)]
struct Step {
    from: usize,
    to: usize,
    factor: f64,
    offset: f64,
}

fn forward_step(p: &[f64], t: &[f64], k: usize) -> Step {
    let n = p.len();
    Step { from: k, to: (k + 1) % n, factor: (t[k] - 1.0) / t[k], offset: p[k] / t[k] }
}

fn solve_axis(p: &[f64], t: &[f64]) -> (AxisStatus, Option<Vec<f64>>) {
    let n = p.len();
    let zeros: Vec<usize> = (0..n).filter(|&k| t[k] == 0.0).collect();
    if zeros.is_empty() {
        return solve_cycle(p, t);
    }
    let mut x = vec![0.0; n];
    let mut status = AxisStatus::Unique;
    for (z, &end) in zeros.iter().enumerate() {
        let prev = zeros[(z + zeros.len() - 1) % zeros.len()];
        let start = (prev + 1) % n;
        match solve_chain(p, t, start, end, &mut x) {
            AxisStatus::NoSolution => return (AxisStatus::NoSolution, None),
            AxisStatus::Free => status = AxisStatus::Free,
            AxisStatus::Unique => {}
        }
    }
    (status, Some(x))
}

/// Solves chain `start..=end` (cyclic) where `t(end) = 0` and every other ratio
/// in the chain is nonzero; writes the chain's coordinates into `x`.
fn solve_chain(p: &[f64], t: &[f64], start: usize, end: usize, x: &mut [f64]) -> AxisStatus {
    let n = p.len();
    let len = (end + n - start) % n;
    x[end] = p[end];
    if len == 0 {
        return AxisStatus::Unique;
    }
    let steps: Vec<Step> = (0..len).map(|j| forward_step(p, t, (start + j) % n)).collect();

    // x(end) = a * x(start) + b
    let (mut a, mut b) = (1.0, 0.0);
    for s in &steps {
        a *= s.factor;
        b = s.factor * b + s.offset;
    }
    if a == 0.0 {
        // Some t = 1 inside the chain decouples x(start) from the anchor.
        let scale = steps.iter().map(|s| s.offset.abs()).fold(p[end].abs(), f64::max).max(1.0);
        if (b - p[end]).abs() > CONSISTENT * scale {
            return AxisStatus::NoSolution;
        }
        x[start] = 0.0;
        for s in &steps[..len - 1] {
            x[s.to] = s.factor * x[s.from] + s.offset;
        }
        return AxisStatus::Free;
    }
    // Back-substitution from the anchor; same solution as solving for x(start)
    // first, without amplifying rounding through large factors.
    for s in steps.iter().rev() {
        x[s.from] = (x[s.to] - s.offset) / s.factor;
    }
    AxisStatus::Unique
}

/// All ratios nonzero: one closing equation around the whole cycle.
fn solve_cycle(p: &[f64], t: &[f64]) -> (AxisStatus, Option<Vec<f64>>) {
    let n = p.len();
    let forward: Vec<Step> = (0..n).map(|k| forward_step(p, t, k)).collect();
    let product: f64 = forward.iter().map(|s| s.factor).product();

    // Walk the cycle in the direction whose total gain is at most 1.
    let steps: Vec<Step> = if product.abs() <= 1.0 {
        forward.clone()
    } else {
        forward
            .iter()
            .rev()
            .map(|s| Step { from: s.to, to: s.from, factor: 1.0 / s.factor, offset: -s.offset / s.factor })
            .collect()
    };
    // Start where the running log-gain peaks, so that no partial product
    // along the walk exceeds 1.
    let mut best = (0usize, 0.0f64);
    let mut acc = 0.0;
    for (j, s) in steps.iter().enumerate().take(n - 1) {
        acc += s.factor.abs().ln();
        if acc > best.1 {
            best = (j + 1, acc);
        }
    }
    let start = best.0;
    let walk = |j: usize| steps[(start + j) % n];

    // x(start) = a * x(start) + b after a full turn.
    let (mut a, mut b, mut scale) = (1.0f64, 0.0f64, 1.0f64);
    for j in 0..n {
        let s = walk(j);
        a *= s.factor;
        b = s.factor * b + s.offset;
        scale = scale.max(b.abs()).max(s.offset.abs());
    }

    if (a - 1.0).abs() <= SINGULAR {
        if b.abs() > CONSISTENT * scale {
            return (AxisStatus::NoSolution, None);
        }
        // Any x(1) works; take x(1) = 0 and propagate.
        let mut x = vec![0.0; n];
        for s in &forward[..n - 1] {
            x[s.to] = s.factor * x[s.from] + s.offset;
        }
        return (AxisStatus::Free, Some(x));
    }

    let mut x = vec![0.0; n];
    x[walk(0).from] = b / (1.0 - a);
    for j in 0..n - 1 {
        let s = walk(j);
        x[s.to] = s.factor * x[s.from] + s.offset;
    }
    (AxisStatus::Unique, Some(x))
}
