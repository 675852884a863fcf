//! Numeric foundation: points, tolerant squared-distance comparison, circle
//! intersection, equilateral-triangle completion, and rotation.
//!
//! All lengths are compared through *squared* distances; square roots are
//! taken only for reporting. Angles are in radians.

mod scalar;

pub use scalar::{
    precision, set_precision, Scalar, DEFAULT_PRECISION, MIN_PRECISION, PRECISION_ENV_VAR,
};

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// A planar point with extended-precision coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Point {
    pub x: Scalar,
    pub y: Scalar,
}

impl Point {
    pub fn new(x: Scalar, y: Scalar) -> Self {
        Point { x, y }
    }

    pub fn from_f64(x: f64, y: f64) -> Self {
        Point::new(Scalar::from_f64(x), Scalar::from_f64(y))
    }

    pub fn origin() -> Self {
        Point::new(Scalar::zero(), Scalar::zero())
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.x.to_f64(), self.y.to_f64())
    }
}

/// Absolute tolerance on squared distances.
#[derive(Clone, Debug)]
pub struct Tolerance {
    pub eps2: Scalar,
}

impl Tolerance {
    /// The default tolerance, 2^-60 on squared distances.
    pub fn default_eps2() -> Self {
        Tolerance {
            eps2: Scalar::exp2i(-60),
        }
    }

    pub fn new(eps2: Scalar) -> Self {
        assert!(eps2.is_positive(), "tolerance must be positive");
        Tolerance { eps2 }
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance::default_eps2()
    }
}

/// Outcome of a tolerant squared-distance comparison.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DistCmp {
    Below,
    Equal,
    Above,
}

/// Which side of a directed segment a constructed vertex lies on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    Ccw,
    Cw,
}

#[derive(Debug, Error)]
pub enum GeometryError {
    /// Two circles coincide (same center and radius within tolerance), so the
    /// intersection is infinite.
    #[error("coincident circles have no finite intersection")]
    CoincidentCircles,
    /// An operation requiring two distinct endpoints received a degenerate
    /// segment.
    #[error("degenerate segment: endpoints coincide within tolerance")]
    DegenerateSegment,
}

/// Squared Euclidean distance.
pub fn dist2(p: &Point, q: &Point) -> Scalar {
    let dx = &p.x - &q.x;
    let dy = &p.y - &q.y;
    &dx * &dx + &dy * &dy
}

/// Compares `dist2(p,q)` against `target2` within `tol`.
pub fn cmp_dist2(p: &Point, q: &Point, target2: &Scalar, tol: &Tolerance) -> DistCmp {
    let d2 = dist2(p, q);
    let diff = &d2 - target2;
    if diff.abs() <= tol.eps2 {
        DistCmp::Equal
    } else if diff.is_negative() {
        DistCmp::Below
    } else {
        DistCmp::Above
    }
}

/// Intersects two circles, returning 0, 1 (tangency within `tol`) or 2
/// points.
///
/// Errors on coincident circles (infinite intersection).
pub fn circle_intersect(
    c1: &Point,
    r1: &Scalar,
    c2: &Point,
    r2: &Scalar,
    tol: &Tolerance,
) -> Result<Vec<Point>, GeometryError> {
    assert!(!r1.is_negative() && !r2.is_negative(), "negative radius");
    let d2 = dist2(c1, c2);
    let rdiff = (r1 - r2).square();
    if d2 <= tol.eps2 && rdiff <= tol.eps2 {
        return Err(GeometryError::CoincidentCircles);
    }
    if d2 <= tol.eps2 {
        // Concentric with different radii: no intersection.
        return Ok(vec![]);
    }
    // Standard two-circle intersection: with a = (d2 + r1^2 - r2^2) / (2 d),
    // the crossing points are at distance a from c1 along c1->c2 and offset
    // by h = sqrt(r1^2 - a^2) perpendicular to it. Work with h^2 to decide
    // tangency, then take one square root.
    let r1sq = r1.square();
    let r2sq = r2.square();
    let two = Scalar::from_i64(2);
    let d = d2.sqrt();
    let a = (&d2 + &r1sq - &r2sq) / (&two * &d);
    let h2 = &r1sq - a.square();
    let ux = (&c2.x - &c1.x) / &d;
    let uy = (&c2.y - &c1.y) / &d;
    let base = Point::new(&c1.x + &a * &ux, &c1.y + &a * &uy);
    if h2.abs() <= tol.eps2 {
        // Tangent within tolerance: a single touching point.
        return Ok(vec![base]);
    }
    if h2.is_negative() {
        return Ok(vec![]);
    }
    let h = h2.sqrt();
    let p1 = Point::new(&base.x - &h * &uy, &base.y + &h * &ux);
    let p2 = Point::new(&base.x + &h * &uy, &base.y - &h * &ux);
    Ok(vec![p1, p2])
}

/// Completes the equilateral triangle on segment `ab`, on the requested side.
pub fn third_vertex(
    a: &Point,
    b: &Point,
    orientation: Orientation,
) -> Result<Point, GeometryError> {
    let d2 = dist2(a, b);
    if d2 <= Tolerance::default_eps2().eps2 {
        return Err(GeometryError::DegenerateSegment);
    }
    let two = Scalar::from_i64(2);
    let mx = (&a.x + &b.x) / &two;
    let my = (&a.y + &b.y) / &two;
    // Height of an equilateral triangle over ab: (sqrt(3)/2)|ab|, applied to
    // the unit normal of ab.
    let h = Scalar::from_i64(3).sqrt() / &two;
    let dx = &b.x - &a.x;
    let dy = &b.y - &a.y;
    let (nx, ny) = match orientation {
        Orientation::Ccw => (-&dy, dx.clone()),
        Orientation::Cw => (dy.clone(), -&dx),
    };
    Ok(Point::new(mx + &h * &nx, my + &h * &ny))
}

/// Rotates `p` around `center` by `angle` radians (counterclockwise).
pub fn rotate(p: &Point, center: &Point, angle: &Scalar) -> Point {
    let c = angle.cos();
    let s = angle.sin();
    let dx = &p.x - &center.x;
    let dy = &p.y - &center.y;
    Point::new(
        &center.x + &c * &dx - &s * &dy,
        &center.y + &s * &dx + &c * &dy,
    )
}
