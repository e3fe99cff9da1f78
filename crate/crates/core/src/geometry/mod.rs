//! Planar construction and reconstruction problems.

pub mod balanced;
pub mod polygon;
pub mod triangle;

pub use balanced::{balanced_arrangement, balanced_check, BalancedInstance, BalancedOutcome};
pub use polygon::{polygon_forward, polygon_reconstruct, AxisStatus, PolygonInstance, Reconstruction};
pub use triangle::{triangle_from_median_closed, triangle_from_median_search, Triangle, TriangleInstance};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn distance(&self, other: &Point) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }

    pub fn midpoint(&self, other: &Point) -> Point {
        Point::new((self.x + other.x) / 2.0, (self.y + other.y) / 2.0)
    }
}

/// Absolute triangle area by the shoelace formula.
pub fn triangle_area(a: &Point, b: &Point, c: &Point) -> f64 {
    ((b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y)).abs() / 2.0
}
