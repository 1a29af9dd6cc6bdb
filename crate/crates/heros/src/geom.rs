//! Points, vectors and axis-aligned boxes in world coordinates (meters).

use std::ops::{Add, Mul, Neg, Sub};

/// A point (or free vector) in world space.
#[derive(Debug, Clone, Copy, PartialEq, Default, serde::Serialize, serde::Deserialize)]
pub struct Point3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Point3 {
    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    pub fn dot(self, other: Self) -> f64 {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    pub fn norm(self) -> f64 {
        self.dot(self).sqrt()
    }

    pub fn dist(self, other: Self) -> f64 {
        (self - other).norm()
    }

    /// Distance ignoring z, used by the planar planning layers.
    pub fn dist_xy(self, other: Self) -> f64 {
        let dx = self.x - other.x;
        let dy = self.y - other.y;
        (dx * dx + dy * dy).sqrt()
    }

    /// Lexicographic ordering by (x, y, z); the deterministic tie-break used
    /// wherever two candidates are otherwise equal.
    pub fn lex_cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.x
            .total_cmp(&other.x)
            .then(self.y.total_cmp(&other.y))
            .then(self.z.total_cmp(&other.z))
    }
}

impl Add for Point3 {
    type Output = Point3;
    fn add(self, rhs: Self) -> Point3 {
        Point3::new(self.x + rhs.x, self.y + rhs.y, self.z + rhs.z)
    }
}

impl Sub for Point3 {
    type Output = Point3;
    fn sub(self, rhs: Self) -> Point3 {
        Point3::new(self.x - rhs.x, self.y - rhs.y, self.z - rhs.z)
    }
}

impl Mul<f64> for Point3 {
    type Output = Point3;
    fn mul(self, s: f64) -> Point3 {
        Point3::new(self.x * s, self.y * s, self.z * s)
    }
}

impl Neg for Point3 {
    type Output = Point3;
    fn neg(self) -> Point3 {
        Point3::new(-self.x, -self.y, -self.z)
    }
}

/// Closed axis-aligned box in world coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Aabb {
    pub min: Point3,
    pub max: Point3,
}

impl Aabb {
    pub fn new(min: Point3, max: Point3) -> Self {
        debug_assert!(min.x <= max.x && min.y <= max.y && min.z <= max.z);
        Self { min, max }
    }

    pub fn from_points<I: IntoIterator<Item = Point3>>(points: I) -> Option<Self> {
        let mut iter = points.into_iter();
        let first = iter.next()?;
        let mut b = Aabb::new(first, first);
        for p in iter {
            b.expand_to(p);
        }
        Some(b)
    }

    pub fn expand_to(&mut self, p: Point3) {
        self.min.x = self.min.x.min(p.x);
        self.min.y = self.min.y.min(p.y);
        self.min.z = self.min.z.min(p.z);
        self.max.x = self.max.x.max(p.x);
        self.max.y = self.max.y.max(p.y);
        self.max.z = self.max.z.max(p.z);
    }

    pub fn union(&self, other: &Aabb) -> Aabb {
        let mut b = *self;
        b.expand_to(other.min);
        b.expand_to(other.max);
        b
    }

    pub fn contains(&self, p: Point3) -> bool {
        p.x >= self.min.x
            && p.x <= self.max.x
            && p.y >= self.min.y
            && p.y <= self.max.y
            && p.z >= self.min.z
            && p.z <= self.max.z
    }

    pub fn intersects(&self, other: &Aabb) -> bool {
        self.min.x <= other.max.x
            && self.max.x >= other.min.x
            && self.min.y <= other.max.y
            && self.max.y >= other.min.y
            && self.min.z <= other.max.z
            && self.max.z >= other.min.z
    }

    /// Grow the box by `r` on every side.
    pub fn inflated(&self, r: f64) -> Aabb {
        Aabb {
            min: Point3::new(self.min.x - r, self.min.y - r, self.min.z - r),
            max: Point3::new(self.max.x + r, self.max.y + r, self.max.z + r),
        }
    }

    /// True if the segment a—b comes within distance 0 of the box (closed test).
    pub fn intersects_segment(&self, a: Point3, b: Point3) -> bool {
        // Slab test on the segment parameter range [0, 1].
        let d = b - a;
        let mut t0 = 0.0f64;
        let mut t1 = 1.0f64;
        for (da, pa, lo, hi) in [
            (d.x, a.x, self.min.x, self.max.x),
            (d.y, a.y, self.min.y, self.max.y),
            (d.z, a.z, self.min.z, self.max.z),
        ] {
            if da.abs() < f64::EPSILON {
                if pa < lo || pa > hi {
                    return false;
                }
            } else {
                let mut ta = (lo - pa) / da;
                let mut tb = (hi - pa) / da;
                if ta > tb {
                    std::mem::swap(&mut ta, &mut tb);
                }
                t0 = t0.max(ta);
                t1 = t1.min(tb);
                if t0 > t1 {
                    return false;
                }
            }
        }
        true
    }

    pub fn area_xy(&self) -> f64 {
        (self.max.x - self.min.x) * (self.max.y - self.min.y)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn segment_slab_test() {
        let b = Aabb::new(Point3::new(1.0, 1.0, 0.0), Point3::new(2.0, 2.0, 1.0));
        assert!(b.intersects_segment(Point3::new(0.0, 1.5, 0.5), Point3::new(3.0, 1.5, 0.5)));
        assert!(!b.intersects_segment(Point3::new(0.0, 3.0, 0.5), Point3::new(3.0, 3.0, 0.5)));
        // Degenerate segment inside the box.
        assert!(b.intersects_segment(Point3::new(1.5, 1.5, 0.5), Point3::new(1.5, 1.5, 0.5)));
    }

    #[test]
    fn union_and_inflate() {
        let a = Aabb::new(Point3::new(0.0, 0.0, 0.0), Point3::new(1.0, 1.0, 1.0));
        let b = Aabb::new(Point3::new(2.0, -1.0, 0.0), Point3::new(3.0, 0.5, 1.0));
        let u = a.union(&b);
        assert_eq!(u.min, Point3::new(0.0, -1.0, 0.0));
        assert_eq!(u.max, Point3::new(3.0, 1.0, 1.0));
        assert!(u.inflated(0.5).contains(Point3::new(-0.4, -1.4, -0.4)));
    }
}
