//! Weighted point sets in which every triangle's area equals the sum of its
//! three vertex weights.
//!
//! With the last two weights equal, solutions exist only for three points and
//! for four points whose first two weights are equal (1-2 parallel to 3-4) or
//! sum to twice the last weight (1-2 bisected by 3-4). Five or more points
//! cannot be balanced.

use super::{triangle_area, Point};
use crate::decimal::Decimal;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BalancedInstance {
    weights: Vec<Decimal>,
}

impl BalancedInstance {
    pub fn new(weights: Vec<Decimal>) -> Result<Self> {
        let n = weights.len();
        if n < 3 {
            return Err(Error::InvalidInput(format!("need at least 3 weights, got {n}")));
        }
        if let Some(i) = weights.iter().position(|w| !w.is_positive()) {
            return Err(Error::InvalidInput(format!("weight {} is not positive", i + 1)));
        }
        if weights[n - 2] != weights[n - 1] {
            return Err(Error::InvalidInput("the last two weights must be equal".into()));
        }
        Ok(BalancedInstance { weights })
    }

    pub fn weights(&self) -> &[Decimal] {
        &self.weights
    }

    pub fn weights_f64(&self) -> Vec<f64> {
        self.weights.iter().map(Decimal::to_f64).collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum BalancedOutcome {
    Points(Vec<Point>),
    NoSolution,
}

/// Coordinates of a balanced arrangement, points in input order.
pub fn balanced_arrangement(inst: &BalancedInstance) -> BalancedOutcome {
    let w = inst.weights_f64();
    match w.len() {
        3 => BalancedOutcome::Points(vec![
            Point::new(0.0, w[0] + w[1] + w[2]),
            Point::new(0.0, 0.0),
            Point::new(2.0, 0.0),
        ]),
        4 => {
            let exact = inst.weights();
            let h = w[0] + w[2] + w[3];
            if exact[0] == exact[1] {
                BalancedOutcome::Points(vec![
                    Point::new(0.0, h),
                    Point::new(2.0 * (w[0] + w[1] + w[3]) / h, h),
                    Point::new(0.0, 0.0),
                    Point::new(2.0, 0.0),
                ])
            } else if sums_to_twice(&exact[0], &exact[1], &exact[3]) {
                BalancedOutcome::Points(vec![
                    Point::new(1.0, h),
                    Point::new(1.0, -(w[1] + w[2] + w[3])),
                    Point::new(0.0, 0.0),
                    Point::new(2.0, 0.0),
                ])
            } else {
                BalancedOutcome::NoSolution
            }
        }
        _ => BalancedOutcome::NoSolution,
    }
}

fn sums_to_twice(a: &Decimal, b: &Decimal, c: &Decimal) -> bool {
    match (a.checked_add(b), c.checked_mul_int(2)) {
        (Some(lhs), Some(rhs)) => lhs == rhs,
        _ => false,
    }
}

/// True iff every triple of distinct points has area within
/// `tol * max(1, weight sum)` of its weight sum.
pub fn balanced_check(points: &[Point], weights: &[f64], tol: f64) -> bool {
    let n = points.len();
    if n != weights.len() || n < 3 {
        return false;
    }
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let sum = weights[i] + weights[j] + weights[k];
                let area = triangle_area(&points[i], &points[j], &points[k]);
                if (area - sum).abs() > tol * sum.max(1.0) {
                    return false;
                }
            }
        }
    }
    true
}
