//! Triangle ABC from |AC| = lb, |AB| = lc and the median length |AM| = lm,
//! where M is the midpoint of BC.
//!
//! With BC = 2a and angle AMB = alpha, the law of cosines in ABM and ACM gives
//!
//! ```text
//! lc^2 = lm^2 + a^2 - 2 lm a cos(alpha)
//! lb^2 = lm^2 + a^2 + 2 lm a cos(alpha)
//! ```
//!
//! Both constructions place B at the origin and C on the positive x axis.

use super::Point;
use crate::error::{Error, Result};

pub const DEFAULT_EPS: f64 = 1e-12;
/// Tolerance for treating |cos(alpha)| as exactly 1.
const UNIT_COS: f64 = 1e-12;
/// Relative tolerance with which a search result must reproduce the input lengths.
const SEARCH_FIT: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TriangleInstance {
    /// |AC|
    pub lb: f64,
    /// |AB|
    pub lc: f64,
    /// |AM|
    pub lm: f64,
}

impl TriangleInstance {
    pub fn new(lb: f64, lc: f64, lm: f64) -> Result<Self> {
        if [lb, lc, lm].iter().all(|l| l.is_finite() && *l > 0.0) {
            Ok(TriangleInstance { lb, lc, lm })
        } else {
            Err(Error::InvalidInput("lengths must be positive and finite".into()))
        }
    }

    fn scale(&self) -> f64 {
        self.lb.max(self.lc).max(self.lm)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Triangle {
    pub a: Point,
    pub b: Point,
    pub c: Point,
    /// A lies on line BC (zero area).
    pub degenerate: bool,
}

impl Triangle {
    fn from_half_base(half: f64, lm: f64, cos_alpha: f64) -> Triangle {
        let degenerate = (cos_alpha.abs() - 1.0).abs() <= UNIT_COS;
        let cos_alpha = cos_alpha.clamp(-1.0, 1.0);
        let sin_alpha = (1.0 - cos_alpha * cos_alpha).sqrt();
        Triangle {
            a: Point::new(half - lm * cos_alpha, lm * sin_alpha),
            b: Point::new(0.0, 0.0),
            c: Point::new(2.0 * half, 0.0),
            degenerate,
        }
    }

    pub fn median_length(&self) -> f64 {
        self.a.distance(&self.b.midpoint(&self.c))
    }
}

/// Direct solution of the two cosine-law equations.
pub fn triangle_from_median_closed(inst: &TriangleInstance) -> Result<Triangle> {
    let TriangleInstance { lb, lc, lm } = *inst;
    let half_sq = (lc * lc + lb * lb) / 2.0 - lm * lm;
    if half_sq.is_nan() || half_sq <= 0.0 {
        return Err(Error::NoTriangle);
    }
    let half = half_sq.sqrt();
    let cos_alpha = (lm * lm + half * half - lc * lc) / (2.0 * lm * half);
    if cos_alpha.abs() > 1.0 + UNIT_COS {
        return Err(Error::NoTriangle);
    }
    Ok(Triangle::from_half_base(half, lm, cos_alpha))
}

/// Nested bisection: outer over the base length 2a, inner over alpha.
///
/// For a fixed `a` the inner search finds the alpha at which the side AB
/// reaches `lc`; the resulting AC is then compared with `lb` to steer the outer
/// search. `base_eps` and `angle_eps` bound the final interval widths.
pub fn triangle_from_median_search(inst: &TriangleInstance, base_eps: f64, angle_eps: f64) -> Result<Triangle> {
    let TriangleInstance { lb, lc, lm } = *inst;
    let side = |half: f64, cos_alpha: f64| (lm * lm + half * half - 2.0 * lm * half * cos_alpha).max(0.0).sqrt();

    // Triangle inequality in ABM bounds a by lm + lc (and by lm + lb in ACM).
    let max_base = 2.0 * (lm + lb.max(lc));
    let (mut lo, mut hi) = (0.0f64, max_base);
    while hi - lo > base_eps {
        let mid = lo + (hi - lo) / 2.0;
        if mid <= lo || mid >= hi {
            break;
        }
        let half = mid / 2.0;
        if lm + half < lc || lm + half < lb {
            lo = mid;
            continue;
        }
        let alpha = angle_for_side(|al| side(half, al.cos()), lc, angle_eps);
        let ac = side(half, (std::f64::consts::PI - alpha).cos());
        if ac < lb {
            lo = mid;
        } else {
            hi = mid;
        }
    }

    let half = (lo + hi) / 4.0;
    if half <= 0.0 {
        return Err(Error::NoTriangle);
    }
    let alpha = angle_for_side(|al| side(half, al.cos()), lc, angle_eps);
    let ab = side(half, alpha.cos());
    let ac = side(half, (std::f64::consts::PI - alpha).cos());
    let fit = SEARCH_FIT * inst.scale().max(1.0);
    if (ab - lc).abs() > fit || (ac - lb).abs() > fit || half <= fit {
        return Err(Error::NoTriangle);
    }
    Ok(Triangle::from_half_base(half, lm, alpha.cos()))
}

/// Bisection on alpha in [0, pi]; `side` increases with alpha.
fn angle_for_side(side: impl Fn(f64) -> f64, target: f64, eps: f64) -> f64 {
    let (mut lo, mut hi) = (0.0f64, std::f64::consts::PI);
    while hi - lo > eps {
        let mid = lo + (hi - lo) / 2.0;
        if mid <= lo || mid >= hi {
            break;
        }
        if side(mid) < target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (lo + hi) / 2.0
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_close(p: Point, x: f64, y: f64, tol: f64) {
        assert!((p.x - x).abs() <= tol && (p.y - y).abs() <= tol, "{p:?} vs ({x}, {y})");
    }

    fn check_lengths(t: &Triangle, inst: &TriangleInstance, tol: f64) {
        assert!((t.a.distance(&t.b) - inst.lc).abs() <= tol);
        assert!((t.a.distance(&t.c) - inst.lb).abs() <= tol);
        assert!((t.median_length() - inst.lm).abs() <= tol);
    }

    #[test]
    fn closed_equilateral() {
        let inst = TriangleInstance::new(2.0, 2.0, 3f64.sqrt()).unwrap();
        let t = triangle_from_median_closed(&inst).unwrap();
        assert_close(t.b, 0.0, 0.0, 0.0);
        assert_close(t.c, 2.0, 0.0, 1e-12);
        assert_close(t.a, 1.0, 3f64.sqrt(), 1e-12);
        check_lengths(&t, &inst, 1e-9);
        assert!(!t.degenerate);
    }

    #[test]
    fn closed_scalene() {
        let inst = TriangleInstance::new(13f64.sqrt(), 5f64.sqrt(), 5f64.sqrt()).unwrap();
        let t = triangle_from_median_closed(&inst).unwrap();
        assert_close(t.c, 4.0, 0.0, 1e-12);
        assert_close(t.a, 1.0, 2.0, 1e-12);
        check_lengths(&t, &inst, 1e-9);
    }

    #[test]
    fn closed_rejects_zero_base() {
        let inst = TriangleInstance::new(1.0, 1.0, 1.0).unwrap();
        assert_eq!(triangle_from_median_closed(&inst), Err(Error::NoTriangle));
    }

    #[test]
    fn closed_flags_collinear() {
        // A, B, C on one line: B=(0,0), C=(2,0), A=(3,0); lc=3, lb=1, lm=2.
        let t = triangle_from_median_closed(&TriangleInstance::new(1.0, 3.0, 2.0).unwrap()).unwrap();
        assert!(t.degenerate);
    }

    #[test]
    fn search_matches_closed() {
        for inst in [
            TriangleInstance::new(2.0, 2.0, 3f64.sqrt()).unwrap(),
            TriangleInstance::new(13f64.sqrt(), 5f64.sqrt(), 5f64.sqrt()).unwrap(),
        ] {
            let s = triangle_from_median_search(&inst, DEFAULT_EPS, DEFAULT_EPS).unwrap();
            let c = triangle_from_median_closed(&inst).unwrap();
            for (p, q) in [(s.a, c.a), (s.b, c.b), (s.c, c.c)] {
                assert_close(p, q.x, q.y, 1e-5);
            }
            check_lengths(&s, &inst, 1e-5);
        }
    }

    #[test]
    fn search_rejects_zero_base() {
        let inst = TriangleInstance::new(1.0, 1.0, 1.0).unwrap();
        assert_eq!(triangle_from_median_search(&inst, DEFAULT_EPS, DEFAULT_EPS), Err(Error::NoTriangle));
    }

    #[test]
    fn nonpositive_lengths_rejected() {
        assert!(TriangleInstance::new(0.0, 1.0, 1.0).is_err());
        assert!(TriangleInstance::new(1.0, -1.0, 1.0).is_err());
        assert!(TriangleInstance::new(1.0, 1.0, f64::INFINITY).is_err());
    }
}
