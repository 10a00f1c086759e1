//! Real 2×2 isometries of the upper half-plane, up to sign.

use serde::{Deserialize, Serialize};

use super::boundary::{BoundaryPoint, GeodesicLine};
use super::GeomError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IsometryClass {
    Hyperbolic,
    Parabolic,
    Elliptic,
    Identity,
}

/// A matrix [[a, b], [c, d]] with det 1, identified with its negation.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct Isometry {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl Isometry {
    pub const IDENTITY: Isometry = Isometry {
        a: 1.0,
        b: 0.0,
        c: 0.0,
        d: 1.0,
    };

    /// Normalizes determinant to 1 (entries get divided by √det; det must be
    /// positive) and fixes the projective sign: first entry of (a, b, c, d)
    /// larger than the working precision is made positive.
    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Isometry {
        let det = a * d - b * c;
        debug_assert!(det > 0.0, "determinant must be positive, got {det}");
        let s = det.sqrt();
        Isometry {
            a: a / s,
            b: b / s,
            c: c / s,
            d: d / s,
        }
        .sign_normalized()
    }

    pub fn sign_normalized(self) -> Isometry {
        let Isometry { a, b, c, d } = self;
        for v in [a, b, c, d] {
            if v.abs() > 1e-14 {
                if v < 0.0 {
                    return Isometry {
                        a: -a,
                        b: -b,
                        c: -c,
                        d: -d,
                    };
                }
                break;
            }
        }
        self
    }

    pub fn compose(&self, rhs: &Isometry) -> Isometry {
        Isometry {
            a: self.a * rhs.a + self.b * rhs.c,
            b: self.a * rhs.b + self.b * rhs.d,
            c: self.c * rhs.a + self.d * rhs.c,
            d: self.c * rhs.b + self.d * rhs.d,
        }
        .sign_normalized()
    }

    pub fn inverse(&self) -> Isometry {
        Isometry {
            a: self.d,
            b: -self.b,
            c: -self.c,
            d: self.a,
        }
        .sign_normalized()
    }

    pub fn trace_abs(&self) -> f64 {
        (self.a + self.d).abs()
    }

    pub fn det(&self) -> f64 {
        self.a * self.d - self.b * self.c
    }

    pub fn classify(&self, tol: f64) -> IsometryClass {
        if self.distance_to_identity() <= tol {
            return IsometryClass::Identity;
        }
        let t = self.trace_abs();
        if t > 2.0 + tol {
            IsometryClass::Hyperbolic
        } else if t < 2.0 - tol {
            IsometryClass::Elliptic
        } else {
            IsometryClass::Parabolic
        }
    }

    /// Max entry deviation from ±identity.
    pub fn distance_to_identity(&self) -> f64 {
        let dp = (self.a - 1.0)
            .abs()
            .max((self.d - 1.0).abs())
            .max(self.b.abs())
            .max(self.c.abs());
        let dm = (self.a + 1.0)
            .abs()
            .max((self.d + 1.0).abs())
            .max(self.b.abs())
            .max(self.c.abs());
        dp.min(dm)
    }

    /// Entrywise distance up to the global sign.
    pub fn distance_to(&self, other: &Isometry) -> f64 {
        let d1 = (self.a - other.a)
            .abs()
            .max((self.b - other.b).abs())
            .max((self.c - other.c).abs())
            .max((self.d - other.d).abs());
        let d2 = (self.a + other.a)
            .abs()
            .max((self.b + other.b).abs())
            .max((self.c + other.c).abs())
            .max((self.d + other.d).abs());
        d1.min(d2)
    }

    /// Möbius action on an interior point x + iy (y > 0).
    pub fn apply_interior(&self, x: f64, y: f64) -> (f64, f64) {
        // (a z + b)/(c z + d) with z = x + iy
        let rn = self.a * x + self.b;
        let in_ = self.a * y;
        let rd = self.c * x + self.d;
        let id = self.c * y;
        let den = rd * rd + id * id;
        ((rn * rd + in_ * id) / den, (in_ * rd - rn * id) / den)
    }

    pub fn apply_boundary(&self, p: BoundaryPoint) -> BoundaryPoint {
        BoundaryPoint::projective(
            self.a * p.num + self.b * p.den,
            self.c * p.num + self.d * p.den,
        )
    }

    pub fn apply_line(&self, l: &GeodesicLine) -> GeodesicLine {
        GeodesicLine::new(self.apply_boundary(l.neg), self.apply_boundary(l.pos))
    }

    /// Translation length 2·arccosh(|tr|/2) of a hyperbolic isometry.
    pub fn translation_length(&self, tol: f64) -> Result<f64, GeomError> {
        let t = self.trace_abs();
        if t <= 2.0 + tol {
            return Err(GeomError::NotHyperbolic {
                abs_trace: t,
                class: self.classify(tol),
            });
        }
        Ok(2.0 * (t / 2.0).acosh())
    }

    /// Oriented axis (repelling → attracting fixed point) and translation
    /// length. Errors on elliptic/parabolic input.
    pub fn axis_and_length(&self, tol: f64) -> Result<(GeodesicLine, f64), GeomError> {
        let length = self.translation_length(tol)?;
        // Fixed points solve c x² + (d − a) x − b = 0. Work projectively and
        // split the roots Citardauq-style so neither depends on a small c.
        let alpha = self.c;
        let beta = self.d - self.a;
        let gamma = -self.b;
        let tr = self.a + self.d;
        let disc = tr * tr - 4.0; // β² − 4αγ for det 1
        debug_assert!(disc > 0.0);
        let sq = disc.sqrt();
        let q = -0.5 * (beta + beta.signum_or_positive() * sq);
        let r1 = BoundaryPoint::projective(q, alpha);
        let r2 = BoundaryPoint::projective(gamma, q);
        // Attracting fixed point has eigenvalue |λ| > 1.
        let lambda = |p: &BoundaryPoint| -> f64 {
            if p.num.abs() >= p.den.abs() {
                (self.a * p.num + self.b * p.den) / p.num
            } else {
                (self.c * p.num + self.d * p.den) / p.den
            }
        };
        let (repelling, attracting) = if lambda(&r1).abs() > 1.0 {
            (r2, r1)
        } else {
            (r1, r2)
        };
        Ok((GeodesicLine::new(repelling, attracting), length))
    }

    /// Hyperbolic distance between interior points.
    pub fn dist(x1: f64, y1: f64, x2: f64, y2: f64) -> f64 {
        let dx = x1 - x2;
        let dy = y1 - y2;
        (1.0 + (dx * dx + dy * dy) / (2.0 * y1 * y2)).acosh()
    }
}

trait SignumOrPositive {
    fn signum_or_positive(self) -> f64;
}

impl SignumOrPositive for f64 {
    fn signum_or_positive(self) -> f64 {
        if self < 0.0 {
            -1.0
        } else {
            1.0
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn diagonal_axis() {
        // diag(e, 1/e): axis 0 → ∞, translation length 2
        let e = 1f64.exp();
        let m = Isometry::new(e, 0.0, 0.0, 1.0 / e);
        let (axis, len) = m.axis_and_length(1e-9).unwrap();
        assert_abs_diff_eq!(len, 2.0, epsilon = 1e-12);
        assert!(axis.neg.is_infinity() == false && axis.neg.value() == 0.0);
        assert!(axis.pos.is_infinity());
    }

    #[test]
    fn conjugation_equivariance() {
        let e = 1.3f64.exp();
        let g = Isometry::new(e, 0.0, 0.0, 1.0 / e);
        let h = Isometry::new(2.0, 1.0, 1.0, 1.0);
        let conj = h.compose(&g).compose(&h.inverse());
        let (axis_g, len_g) = g.axis_and_length(1e-9).unwrap();
        let (axis_c, len_c) = conj.axis_and_length(1e-9).unwrap();
        assert_abs_diff_eq!(len_g, len_c, epsilon = 1e-9);
        let moved = h.apply_line(&axis_g);
        assert!(moved.pos.angle_dist(axis_c.pos) < 1e-9);
        assert!(moved.neg.angle_dist(axis_c.neg) < 1e-9);
    }

    #[test]
    fn inverse_flips_orientation() {
        let m = Isometry::new(3.0, 1.0, 2.0, 1.0);
        let (ax, len) = m.axis_and_length(1e-9).unwrap();
        let (ax_inv, len_inv) = m.inverse().axis_and_length(1e-9).unwrap();
        assert_abs_diff_eq!(len, len_inv, epsilon = 1e-12);
        assert!(ax.pos.angle_dist(ax_inv.neg) < 1e-9);
        assert!(ax.neg.angle_dist(ax_inv.pos) < 1e-9);
    }

    #[test]
    fn elliptic_rejected() {
        let th = 0.4f64;
        let m = Isometry::new(th.cos(), -th.sin(), th.sin(), th.cos());
        assert!(matches!(
            m.axis_and_length(1e-9),
            Err(GeomError::NotHyperbolic { .. })
        ));
    }

    #[test]
    fn interior_distance() {
        assert_abs_diff_eq!(Isometry::dist(0.0, 1.0, 0.0, 1f64.exp()), 1.0, epsilon = 1e-12);
    }
}
