//! Boundary points of the upper half-plane and linking of geodesics.
//!
//! A boundary point is a projective pair (num, den) ~ num/den with ∞ = (1, 0).
//! The cyclic order runs through the chart θ = atan2(-2nd, n² - d²), the
//! argument of the Cayley image (x - i)/(x + i) on the unit circle; it is
//! projective-invariant and puts ∞ at θ = 0, so no configuration needs a
//! special case.

use serde::{Deserialize, Serialize};

use super::{GeomError, BOUNDARY_RESOLUTION};

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct BoundaryPoint {
    pub num: f64,
    pub den: f64,
}

/// Chart angle in (-π, π].
pub fn circle_angle(p: BoundaryPoint) -> f64 {
    (-2.0 * p.num * p.den).atan2(p.num * p.num - p.den * p.den)
}

fn angle_gap(a: f64, b: f64) -> f64 {
    let two_pi = std::f64::consts::TAU;
    let mut d = (a - b).rem_euclid(two_pi);
    if d > std::f64::consts::PI {
        d = two_pi - d;
    }
    d
}

impl BoundaryPoint {
    pub fn finite(x: f64) -> BoundaryPoint {
        BoundaryPoint { num: x, den: 1.0 }.normalized()
    }

    pub fn infinity() -> BoundaryPoint {
        BoundaryPoint { num: 1.0, den: 0.0 }
    }

    pub fn projective(num: f64, den: f64) -> BoundaryPoint {
        debug_assert!(num != 0.0 || den != 0.0);
        BoundaryPoint { num, den }.normalized()
    }

    fn normalized(self) -> BoundaryPoint {
        let h = self.num.hypot(self.den);
        let (mut n, mut d) = (self.num / h, self.den / h);
        if d < 0.0 || (d == 0.0 && n < 0.0) {
            n = -n;
            d = -d;
        }
        BoundaryPoint { num: n, den: d }
    }

    pub fn is_infinity(&self) -> bool {
        self.den.abs() <= 1e-300
    }

    pub fn value(&self) -> f64 {
        self.num / self.den
    }

    pub fn angle(&self) -> f64 {
        circle_angle(*self)
    }

    /// Distance in the circle chart.
    pub fn angle_dist(&self, other: BoundaryPoint) -> f64 {
        angle_gap(self.angle(), other.angle())
    }
}

/// An oriented complete geodesic: endpoints (neg → pos) on the boundary.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct GeodesicLine {
    pub neg: BoundaryPoint,
    pub pos: BoundaryPoint,
}

impl GeodesicLine {
    pub fn new(neg: BoundaryPoint, pos: BoundaryPoint) -> GeodesicLine {
        GeodesicLine { neg, pos }
    }

    pub fn from_endpoints(neg: f64, pos: f64) -> GeodesicLine {
        GeodesicLine::new(BoundaryPoint::finite(neg), BoundaryPoint::finite(pos))
    }

    pub fn reversed(&self) -> GeodesicLine {
        GeodesicLine {
            neg: self.pos,
            pos: self.neg,
        }
    }

    /// Same unoriented line: endpoint sets match within the tolerance.
    pub fn same_unoriented(&self, other: &GeodesicLine, tol: f64) -> bool {
        let direct = self.neg.angle_dist(other.neg) < tol && self.pos.angle_dist(other.pos) < tol;
        let flipped = self.neg.angle_dist(other.pos) < tol && self.pos.angle_dist(other.neg) < tol;
        direct || flipped
    }
}

/// Linking of endpoint pairs on the circle at infinity: true iff exactly one
/// endpoint of l2 lies in the open arc from l1.neg to l1.pos (counter-
/// clockwise in the chart), equivalently iff the lines cross transversely.
///
/// Degeneracy policy: an endpoint of one line within `tol` of an endpoint of
/// the other makes the decision ill-conditioned and errors. The gap between
/// the two endpoints of a single line only needs to clear the floating-point
/// resolution floor (distinct lifts of short closed geodesics legitimately
/// have endpoint gaps near e^{-d} for displacement d, far below any usable
/// cross-line tolerance).
pub fn linked(l1: &GeodesicLine, l2: &GeodesicLine, tol: f64) -> Result<bool, GeomError> {
    let a1 = l1.neg.angle();
    let a2 = l1.pos.angle();
    let b1 = l2.neg.angle();
    let b2 = l2.pos.angle();
    for (gap, which) in [
        (angle_gap(a1, a2), "of the first line"),
        (angle_gap(b1, b2), "of the second line"),
    ] {
        if gap < BOUNDARY_RESOLUTION {
            return Err(GeomError::DegenerateConfiguration {
                which,
                gap,
                tol: BOUNDARY_RESOLUTION,
            });
        }
    }
    for (x, y) in [(a1, b1), (a1, b2), (a2, b1), (a2, b2)] {
        let gap = angle_gap(x, y);
        if gap < tol {
            return Err(GeomError::DegenerateConfiguration {
                which: "on distinct lines",
                gap,
                tol,
            });
        }
    }
    let two_pi = std::f64::consts::TAU;
    let span = (a2 - a1).rem_euclid(two_pi);
    let in1 = (b1 - a1).rem_euclid(two_pi) < span;
    let in2 = (b2 - a1).rem_euclid(two_pi) < span;
    Ok(in1 != in2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn line(a: f64, b: f64) -> GeodesicLine {
        GeodesicLine::from_endpoints(a, b)
    }

    #[test]
    fn listed_boundary_cases() {
        let with_inf = GeodesicLine::new(BoundaryPoint::finite(0.0), BoundaryPoint::infinity());
        assert!(linked(&line(-1.0, 1.0), &with_inf, 1e-9).unwrap());
        assert!(!linked(&line(-1.0, 1.0), &line(2.0, 3.0), 1e-9).unwrap());
        assert!(linked(&line(0.0, 2.0), &line(1.0, 3.0), 1e-9).unwrap());
    }

    #[test]
    fn symmetric() {
        let l1 = line(0.0, 2.0);
        let l2 = line(1.0, 3.0);
        assert_eq!(
            linked(&l1, &l2, 1e-9).unwrap(),
            linked(&l2, &l1, 1e-9).unwrap()
        );
    }

    #[test]
    fn orientation_irrelevant() {
        let l1 = line(0.0, 2.0);
        let l2 = line(3.0, 1.0);
        assert!(linked(&l1, &l2, 1e-9).unwrap());
        assert!(linked(&l1.reversed(), &l2, 1e-9).unwrap());
    }

    #[test]
    fn degeneracy_errors() {
        let l1 = line(0.0, 2.0);
        let l2 = line(2.0 + 1e-12, 5.0);
        assert!(matches!(
            linked(&l1, &l2, 1e-9),
            Err(GeomError::DegenerateConfiguration { .. })
        ));
    }

    #[test]
    fn infinity_chart() {
        assert!(BoundaryPoint::infinity().is_infinity());
        assert_eq!(BoundaryPoint::infinity().angle(), 0.0);
        // huge finite values approach the ∞ chart point
        assert!(BoundaryPoint::finite(1e12).angle().abs() < 1e-11);
    }
}
