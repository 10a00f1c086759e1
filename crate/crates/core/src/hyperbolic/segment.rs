//! Geodesic segments, ε-traps, and the numeric stability checks.
//!
//! Every line carries a canonical frame: the SL(2,R) matrix taking the model
//! geodesic (0 → ∞, unit speed, origin at i) onto it. Segments are parameter
//! intervals in that frame, so lengths are parameter differences and deck
//! translates act by parameter shifts.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::word::Word;

use super::boundary::{linked, BoundaryPoint, GeodesicLine};
use super::isometry::Isometry;
use super::octagon::FuchsianRep;
use super::GeomError;

/// Frame matrix: maps 0 ↦ neg, ∞ ↦ pos, i ↦ the marked foot point.
pub fn frame_of(line: &GeodesicLine) -> Isometry {
    let pn = line.pos.num;
    let pd = line.pos.den;
    let nn = line.neg.num;
    let nd = line.neg.den;
    let cross = pn * nd - nn * pd;
    debug_assert!(cross.abs() > 1e-300, "degenerate line");
    let s = 1.0 / cross.abs().sqrt();
    if cross > 0.0 {
        Isometry::new(pn * s, nn * s, pd * s, nd * s)
    } else {
        Isometry::new(pn * s, -nn * s, pd * s, -nd * s)
    }
}

/// Signed arclength parameter (in the canonical frame) of the orthogonal
/// projection of an interior point onto the line.
pub fn param_of(line: &GeodesicLine, x: f64, y: f64) -> f64 {
    let e_inv = frame_of(line).inverse();
    let (wx, wy) = e_inv.apply_interior(x, y);
    (wx * wx + wy * wy).sqrt().ln()
}

/// Point at signed arclength s along the line.
pub fn point_at(line: &GeodesicLine, s: f64) -> (f64, f64) {
    frame_of(line).apply_interior(0.0, s.exp())
}

/// Distance from an interior point to a complete geodesic:
/// sinh d = |Re w| / Im w in the line's frame.
pub fn dist_to_line(line: &GeodesicLine, x: f64, y: f64) -> f64 {
    let e_inv = frame_of(line).inverse();
    let (wx, wy) = e_inv.apply_interior(x, y);
    (wx.abs() / wy).asinh()
}

/// A nonempty parameter interval on a carrier line.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GeodesicSegment {
    pub line: GeodesicLine,
    pub lo: f64,
    pub hi: f64,
}

impl GeodesicSegment {
    pub fn new(line: GeodesicLine, lo: f64, hi: f64) -> GeodesicSegment {
        assert!(hi > lo, "segment parameter interval must be nonempty");
        GeodesicSegment { line, lo, hi }
    }

    pub fn length(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn point(&self, s: f64) -> (f64, f64) {
        point_at(&self.line, s)
    }

    pub fn endpoints(&self) -> ((f64, f64), (f64, f64)) {
        (self.point(self.lo), self.point(self.hi))
    }

    /// Image under an isometry, with parameters recomputed in the image
    /// line's canonical frame.
    pub fn transformed(&self, g: &Isometry) -> GeodesicSegment {
        let line = g.apply_line(&self.line);
        let (x1, y1) = self.point(self.lo);
        let (x2, y2) = self.point(self.hi);
        let (u1, v1) = g.apply_interior(x1, y1);
        let (u2, v2) = g.apply_interior(x2, y2);
        let a = param_of(&line, u1, v1);
        let b = param_of(&line, u2, v2);
        GeodesicSegment::new(line, a.min(b), a.max(b))
    }

    pub fn contains_param(&self, s: f64, slack: f64) -> bool {
        s >= self.lo - slack && s <= self.hi + slack
    }
}

/// Transverse crossing data of two oriented lines.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Crossing {
    pub point: (f64, f64),
    pub param1: f64,
    pub param2: f64,
    /// Signed angle from line1 to line2 at the crossing, in (−π, 0)∪(0, π).
    pub angle_signed: f64,
}

impl Crossing {
    pub fn angle(&self) -> f64 {
        self.angle_signed.abs()
    }
}

/// Crossing point, parameters and angle of two transverse lines.
pub fn crossing_of(l1: &GeodesicLine, l2: &GeodesicLine, tol: f64) -> Result<Crossing, GeomError> {
    if !linked(l1, l2, tol)? {
        return Err(GeomError::NotCrossing);
    }
    let e = frame_of(l1);
    let e_inv = e.inverse();
    let q1p = e_inv.apply_boundary(l2.neg);
    let q2p = e_inv.apply_boundary(l2.pos);
    // linked lines pulled to the model axis have finite endpoints of
    // opposite signs
    let q1 = q1p.value();
    let q2 = q2p.value();
    debug_assert!(q1.is_finite() && q2.is_finite() && q1 * q2 < 0.0);
    let y0 = (-q1 * q2).sqrt();
    let param1 = y0.ln();
    let point = e.apply_interior(0.0, y0);
    let param2 = param_of(l2, point.0, point.1);
    // tangent of l2 in the model frame at (0, y0), oriented q1 → q2
    let c = 0.5 * (q1 + q2);
    let sign = if q2 > q1 { 1.0 } else { -1.0 };
    let (tx, ty) = (sign * y0, sign * c);
    let angle_signed = (-tx).atan2(ty);
    Ok(Crossing {
        point,
        param1,
        param2,
        angle_signed,
    })
}

/// The ε-trap of a transverse crossing.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TrapWitness {
    pub alpha_eps: GeodesicSegment,
    pub beta_eps: GeodesicSegment,
    pub epsilon: f64,
    pub crossing_point: (f64, f64),
    /// Crossing angle in (0, π).
    pub angle: f64,
}

/// Trap segments of a crossing pair: each segment is the subset of its line
/// within distance 2ε of the other line. The half-length t solves
/// sinh(t)·sin(θ) = sinh(2ε); the closed form is validated in tests against
/// direct point-to-line distances.
pub fn trap_segment(
    alpha: &GeodesicLine,
    beta: &GeodesicLine,
    eps: f64,
    tol: f64,
) -> Result<TrapWitness, GeomError> {
    assert!(eps > 0.0);
    let cr = crossing_of(alpha, beta, tol)?;
    let theta = cr.angle();
    let t = ((2.0 * eps).sinh() / theta.sin()).asinh();
    Ok(TrapWitness {
        alpha_eps: GeodesicSegment::new(*alpha, cr.param1 - t, cr.param1 + t),
        beta_eps: GeodesicSegment::new(*beta, cr.param2 - t, cr.param2 + t),
        epsilon: eps,
        crossing_point: cr.point,
        angle: theta,
    })
}

/// A linked pair of lifts of the closed geodesic of `gamma`: the axis and a
/// conjugate axis, with the conjugator.
pub fn find_linked_lift_pair(
    rep: &FuchsianRep,
    gamma: &Word,
    max_conjugator_len: usize,
) -> Option<(GeodesicLine, GeodesicLine, Word)> {
    let (_, core) = gamma.cyclic_reduce();
    let m = rep.evaluate(&core);
    let (axis, _) = m.axis_and_length(rep.tol_geom).ok()?;
    let alphabet = crate::letters::Letter::alphabet(rep.genus());
    let mut frontier = vec![Word::empty()];
    for _ in 0..max_conjugator_len {
        let mut next = Vec::new();
        for w in &frontier {
            for &l in &alphabet {
                if w.letters().last() == Some(&l.inverse()) {
                    continue;
                }
                let g = w.concat(&Word::single(l));
                let moved = rep.evaluate(&g).apply_line(&axis);
                if moved.same_unoriented(&axis, rep.tol_geom) {
                    next.push(g);
                    continue;
                }
                if matches!(linked(&axis, &moved, rep.tol_geom), Ok(true)) {
                    return Some((axis, moved, g));
                }
                next.push(g);
            }
        }
        frontier = next;
    }
    None
}

/// Numeric instance of the stable-intersection lemma: σ is ε-close to a
/// segment of a lift of γ and longer than 2·length(γ) + 4ε; the check finds
/// two deck translates of σ and verifies they cross transversely inside the
/// translated parameter ranges. On conforming inputs the lemma predicts
/// `true`; `false` is a reportable failure, not a valid outcome.
pub fn stable_intersection_check(
    rep: &FuchsianRep,
    gamma: &Word,
    sigma: &GeodesicSegment,
    eps: f64,
) -> Result<bool, GeomError> {
    if 8.0 * eps >= rep.systole_estimate {
        return Err(GeomError::EpsilonTooLarge {
            eight_eps: 8.0 * eps,
            systole: rep.systole_estimate,
        });
    }
    let (_, core) = gamma.cyclic_reduce();
    let m = rep.evaluate(&core);
    let (axis, ell) = m.axis_and_length(rep.tol_geom)?;
    let needed = 2.0 * ell + 4.0 * eps;
    if sigma.length() <= needed {
        return Err(GeomError::SegmentTooShort {
            len: sigma.length(),
            needed,
        });
    }
    let Some((alpha, beta, g)) = find_linked_lift_pair(rep, &core, 4) else {
        return Ok(false);
    };
    debug_assert!(alpha.same_unoriented(&axis, 1e-6));
    let trap = trap_segment(&alpha, &beta, eps, rep.tol_geom)?;

    // Shadow of σ on the axis.
    let (p_lo, p_hi) = sigma.endpoints();
    let sa = param_of(&alpha, p_lo.0, p_lo.1);
    let sb = param_of(&alpha, p_hi.0, p_hi.1);
    let (sa_lo, sa_hi) = (sa.min(sb), sa.max(sb));

    let g_mat = rep.evaluate(&g);

    // Slide σ by powers of γ to cover each trap segment (the translation
    // along the axis shifts parameters by the translation length).
    let cover = |target_lo: f64, target_hi: f64, extra: Option<&Isometry>| -> Option<Isometry> {
        // For the β side, precompose with g: the shadow of g·γ^j·σ in β's
        // frame is the α-shadow shifted by the frame offset of g.
        let (shift_lo, shift_hi, offset) = match extra {
            None => (sa_lo, sa_hi, 0.0),
            Some(gm) => {
                let (x, y) = point_at(&alpha, 0.0);
                let (gx, gy) = gm.apply_interior(x, y);
                let off = param_of(&beta, gx, gy);
                (sa_lo, sa_hi, off)
            }
        };
        let j_min = ((target_hi - offset - shift_hi) / ell).ceil() as i64;
        let j_max = ((target_lo - offset - shift_lo) / ell).floor() as i64;
        if j_min > j_max {
            return None;
        }
        let j = j_min;
        let pow = power(&m, j);
        Some(match extra {
            None => pow,
            Some(gm) => gm.compose(&pow),
        })
    };

    let Some(t1) = cover(trap.alpha_eps.lo, trap.alpha_eps.hi, None) else {
        return Ok(false);
    };
    let Some(t2) = cover(trap.beta_eps.lo, trap.beta_eps.hi, Some(&g_mat)) else {
        return Ok(false);
    };

    let seg1 = sigma.transformed(&t1);
    let seg2 = sigma.transformed(&t2);
    match crossing_of(&seg1.line, &seg2.line, rep.tol_geom) {
        Ok(cr) => Ok(seg1.contains_param(cr.param1, 0.0) && seg2.contains_param(cr.param2, 0.0)),
        Err(GeomError::NotCrossing) => Ok(false),
        Err(e) => Err(e),
    }
}

fn power(m: &Isometry, j: i64) -> Isometry {
    let base = if j >= 0 { *m } else { m.inverse() };
    let mut out = Isometry::IDENTITY;
    for _ in 0..j.unsigned_abs() {
        out = out.compose(&base);
    }
    out
}

/// A random isometry whose displacement on the given anchor points stays
/// below `max_disp`: a small rotation-plus-translation, shrunk until it
/// fits. Deterministic for a fixed RNG.
pub fn perturbing_isometry(
    rng: &mut impl Rng,
    anchors: &[(f64, f64)],
    max_disp: f64,
) -> Isometry {
    let mut scale = 0.05f64;
    loop {
        let phi: f64 = rng.gen_range(-scale..scale);
        let s: f64 = rng.gen_range(-scale..scale);
        let b: f64 = rng.gen_range(-scale..scale);
        let rot = Isometry::new((phi / 2.0).cos(), (phi / 2.0).sin(), -(phi / 2.0).sin(), (phi / 2.0).cos());
        let boost = Isometry::new((s / 2.0).exp(), b, 0.0, (-s / 2.0).exp());
        let m = rot.compose(&boost);
        let disp = anchors
            .iter()
            .map(|&(x, y)| {
                let (u, v) = m.apply_interior(x, y);
                Isometry::dist(x, y, u, v)
            })
            .fold(0.0f64, f64::max);
        if disp < max_disp * 0.95 && disp > 0.0 {
            return m;
        }
        scale *= 0.5;
        if scale < 1e-12 {
            return Isometry::IDENTITY;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn frame_and_params() {
        let l = GeodesicLine::from_endpoints(-1.0, 1.0);
        let (x, y) = point_at(&l, 0.7);
        assert_abs_diff_eq!(param_of(&l, x, y), 0.7, epsilon = 1e-12);
        // unit speed
        let (x2, y2) = point_at(&l, 1.2);
        assert_abs_diff_eq!(Isometry::dist(x, y, x2, y2), 0.5, epsilon = 1e-10);
    }

    #[test]
    fn perpendicular_crossing() {
        // model axis vs unit semicircle cross at i with angle π/2
        let l1 = GeodesicLine::new(BoundaryPoint::finite(0.0), BoundaryPoint::infinity());
        let l2 = GeodesicLine::from_endpoints(-1.0, 1.0);
        let cr = crossing_of(&l1, &l2, 1e-9).unwrap();
        assert_abs_diff_eq!(cr.point.0, 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(cr.point.1, 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(cr.angle(), std::f64::consts::FRAC_PI_2, epsilon = 1e-12);
    }

    #[test]
    fn trap_half_length_perpendicular() {
        // sinh(2ε) = 1 at perpendicular crossing: half-length asinh(1)
        let l1 = GeodesicLine::new(BoundaryPoint::finite(0.0), BoundaryPoint::infinity());
        let l2 = GeodesicLine::from_endpoints(-1.0, 1.0);
        let eps = 0.5 * 1f64.asinh();
        let trap = trap_segment(&l1, &l2, eps, 1e-9).unwrap();
        let expect = 1f64.asinh();
        assert_abs_diff_eq!(trap.alpha_eps.length(), 2.0 * expect, epsilon = 1e-12);
        assert_abs_diff_eq!(trap.beta_eps.length(), 2.0 * expect, epsilon = 1e-12);
    }

    #[test]
    fn trap_endpoint_distance_matches_2eps() {
        // closed form versus direct point-to-line distance, oblique case
        let l1 = GeodesicLine::from_endpoints(-2.0, 3.0);
        let l2 = GeodesicLine::from_endpoints(0.0, 4.0);
        let eps = 0.11;
        let trap = trap_segment(&l1, &l2, eps, 1e-9).unwrap();
        for s in [trap.alpha_eps.lo, trap.alpha_eps.hi] {
            let (x, y) = point_at(&l1, s);
            assert_abs_diff_eq!(dist_to_line(&l2, x, y), 2.0 * eps, epsilon = 1e-9);
        }
        // interior points are strictly closer
        let (xm, ym) = point_at(&l1, 0.5 * (trap.alpha_eps.lo + trap.alpha_eps.hi));
        assert!(dist_to_line(&l2, xm, ym) < 2.0 * eps);
    }

    #[test]
    fn shrinking_eps_shrinks_trap() {
        let l1 = GeodesicLine::from_endpoints(-2.0, 3.0);
        let l2 = GeodesicLine::from_endpoints(0.0, 4.0);
        let mut last = f64::INFINITY;
        for eps in [0.4, 0.2, 0.1, 0.05, 0.01] {
            let t = trap_segment(&l1, &l2, eps, 1e-9).unwrap();
            assert!(t.alpha_eps.length() < last);
            last = t.alpha_eps.length();
        }
        assert!(last < 0.1);
    }

    #[test]
    fn transformed_segment_keeps_length() {
        let l = GeodesicLine::from_endpoints(-1.0, 1.0);
        let seg = GeodesicSegment::new(l, -0.3, 1.1);
        let g = Isometry::new(2.0, 1.0, 1.0, 1.0);
        let moved = seg.transformed(&g);
        assert_abs_diff_eq!(moved.length(), seg.length(), epsilon = 1e-9);
    }
}
