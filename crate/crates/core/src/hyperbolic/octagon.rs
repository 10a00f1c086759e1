//! The regular-octagon Fuchsian representation of the genus-2 surface group.
//!
//! The fundamental domain is the regular hyperbolic octagon with interior
//! angle π/4 (all eight corners glue to the single vertex, angle sum 2π) and
//! side pairing in the commutator pattern a b a⁻¹ b⁻¹ c d c⁻¹ d⁻¹. The
//! construction happens in the Poincaré disk, where the star of the base
//! vertex is explicit: the eight edge-germs at V₀ sit at equal angles π/4,
//! and walking the vertex cycle of the relator assigns each germ its letter.
//! Each generator is then the unique orientation-preserving isometry carrying
//! the inverse-letter edge-germ onto the letter edge-germ. The result is
//! conjugated to the upper half-plane (real matrices) through the Cayley map;
//! the octagon center lands on i.

use crate::letters::Letter;
use crate::word::Word;

use super::isometry::Isometry;
use super::GeomError;

/// Cache key / provenance id for this representation.
pub const OCTAGON_REP_ID: &str = "octagon-genus2-regular-v1";

#[derive(Debug, Clone, Copy, PartialEq)]
struct Cx {
    re: f64,
    im: f64,
}

impl Cx {
    const ZERO: Cx = Cx { re: 0.0, im: 0.0 };
    const ONE: Cx = Cx { re: 1.0, im: 0.0 };
    const I: Cx = Cx { re: 0.0, im: 1.0 };

    fn new(re: f64, im: f64) -> Cx {
        Cx { re, im }
    }

    fn polar(r: f64, th: f64) -> Cx {
        Cx::new(r * th.cos(), r * th.sin())
    }

    fn conj(self) -> Cx {
        Cx::new(self.re, -self.im)
    }

    fn abs2(self) -> f64 {
        self.re * self.re + self.im * self.im
    }

    fn arg(self) -> f64 {
        self.im.atan2(self.re)
    }

    fn add(self, o: Cx) -> Cx {
        Cx::new(self.re + o.re, self.im + o.im)
    }

    fn sub(self, o: Cx) -> Cx {
        Cx::new(self.re - o.re, self.im - o.im)
    }

    fn mul(self, o: Cx) -> Cx {
        Cx::new(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )
    }

    fn div(self, o: Cx) -> Cx {
        let d = o.abs2();
        Cx::new(
            (self.re * o.re + self.im * o.im) / d,
            (self.im * o.re - self.re * o.im) / d,
        )
    }

    fn scale(self, s: f64) -> Cx {
        Cx::new(self.re * s, self.im * s)
    }
}

/// 2×2 complex matrix acting on the disk by Möbius transformation.
#[derive(Debug, Clone, Copy)]
struct DiskMat {
    e: [[Cx; 2]; 2],
}

impl DiskMat {
    fn mul(self, o: DiskMat) -> DiskMat {
        let mut r = [[Cx::ZERO; 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                r[i][j] = self.e[i][0].mul(o.e[0][j]).add(self.e[i][1].mul(o.e[1][j]));
            }
        }
        DiskMat { e: r }
    }

    fn apply(self, z: Cx) -> Cx {
        self.e[0][0]
            .mul(z)
            .add(self.e[0][1])
            .div(self.e[1][0].mul(z).add(self.e[1][1]))
    }

    /// Disk translation taking 0 to p; SU(1,1), preserves angles at 0.
    fn translate(p: Cx) -> DiskMat {
        let s = 1.0 / (1.0 - p.abs2()).sqrt();
        DiskMat {
            e: [
                [Cx::ONE.scale(s), p.scale(s)],
                [p.conj().scale(s), Cx::ONE.scale(s)],
            ],
        }
    }

    fn rotate(phi: f64) -> DiskMat {
        DiskMat {
            e: [
                [Cx::polar(1.0, phi / 2.0), Cx::ZERO],
                [Cx::ZERO, Cx::polar(1.0, -phi / 2.0)],
            ],
        }
    }

    /// Conjugate to the upper half-plane through the Cayley map
    /// z ↦ (z − i)/(z + i); SU(1,1) input gives a real matrix.
    fn to_half_plane(self) -> Isometry {
        let c = [[Cx::ONE, Cx::I.scale(-1.0)], [Cx::ONE, Cx::I]];
        // C⁻¹ = adj(C)/det(C), det = 2i
        let det = Cx::new(0.0, 2.0);
        let cinv = [
            [c[1][1].div(det), c[0][1].scale(-1.0).div(det)],
            [c[1][0].scale(-1.0).div(det), c[0][0].div(det)],
        ];
        let mut m = [[Cx::ZERO; 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    for l in 0..2 {
                        m[i][j] = m[i][j].add(cinv[i][k].mul(self.e[k][l]).mul(c[l][j]));
                    }
                }
            }
        }
        let imag = m
            .iter()
            .flatten()
            .map(|z| z.im.abs())
            .fold(0.0f64, f64::max);
        debug_assert!(imag < 1e-10, "half-plane conjugate must be real, got {imag}");
        Isometry::new(m[0][0].re, m[0][1].re, m[1][0].re, m[1][1].re)
    }
}

/// A discrete faithful representation: images of the positive generator
/// letters, with geometric tolerances and the systole stand-in.
#[derive(Debug, Clone)]
pub struct FuchsianRep {
    genus: u8,
    images: Vec<Isometry>,
    base_point: (f64, f64),
    pub tol_geom: f64,
    pub systole_estimate: f64,
    pub rep_id: &'static str,
}

impl FuchsianRep {
    pub fn genus(&self) -> u8 {
        self.genus
    }

    pub fn generator_image(&self, letter: Letter) -> Isometry {
        let m = self.images[(letter.index() - 1) as usize];
        if letter.is_positive() {
            m
        } else {
            m.inverse()
        }
    }

    /// Product of generator images in word order.
    pub fn evaluate(&self, w: &Word) -> Isometry {
        let mut m = Isometry::IDENTITY;
        for &l in w.letters() {
            m = m.compose(&self.generator_image(l));
        }
        m
    }

    /// Base point: the vertex of the octagon tiling whose orbit the
    /// generators permute; every letter displaces it by the side length.
    pub fn base_point(&self) -> (f64, f64) {
        self.base_point
    }

    /// Orbit displacement d(x₀, g·x₀).
    pub fn displacement(&self, w: &Word) -> f64 {
        let (x0, y0) = self.base_point();
        let m = self.evaluate(w);
        let (x, y) = m.apply_interior(x0, y0);
        Isometry::dist(x0, y0, x, y)
    }

    pub fn with_systole(mut self, systole: f64) -> FuchsianRep {
        self.systole_estimate = systole;
        self
    }
}

/// The regular-octagon representation. Only genus 2 ships.
pub fn octagon_rep(genus: u8) -> Result<FuchsianRep, GeomError> {
    if genus != 2 {
        return Err(GeomError::UnsupportedGenus { genus });
    }
    let pi = std::f64::consts::PI;
    // circumradius: cosh(OV) = cot²(π/8); side: cosh(s/2) = cot(π/8)
    let cot8 = 1.0 / (pi / 8.0).tan();
    let vertex_dist = (cot8 * cot8).acosh();
    let side = 2.0 * cot8.acosh();
    let v0 = Cx::new((vertex_dist / 2.0).tanh(), 0.0);

    // Edge germs at V₀, letters a b a⁻¹ b⁻¹ c d c⁻¹ d⁻¹ encoded 1..4 signed.
    // Walking the vertex cycle of the relator counterclockwise from the tile
    // corner gives the germ order a, d, c⁻¹, d⁻¹, c, b, a⁻¹, b⁻¹ starting at
    // angle π − π/8 and stepping by π/4.
    let germ_letters: [i8; 8] = [1, 4, -3, -4, 3, 2, -1, -2];
    let mut direction = std::collections::HashMap::new();
    for (k, &raw) in germ_letters.iter().enumerate() {
        let theta = pi - pi / 8.0 + (k as f64) * (pi / 4.0);
        direction.insert(raw, theta);
    }

    // Neighbor vertex in direction θ at hyperbolic distance `side` from V₀.
    let reach = |theta: f64| -> Cx {
        DiskMat::translate(v0).apply(Cx::polar((side / 2.0).tanh(), theta))
    };

    let mut images = Vec::with_capacity(4);
    for gen in 1i8..=4 {
        let w_pos = reach(direction[&gen]);
        let w_neg = reach(direction[&(-gen)]);
        // Φ(x): (V₀ → W_{x⁻¹}) ↦ (W_x → V₀)
        let m = mapping_oriented(v0, w_neg, w_pos, v0);
        images.push(m.to_half_plane());
    }

    // Base vertex in the half-plane: Cayley image of V₀ = t on the real
    // disk axis is i·(1+t)/(1−t).
    let t = v0.re;
    let rep = FuchsianRep {
        genus,
        images,
        base_point: (0.0, (1.0 + t) / (1.0 - t)),
        tol_geom: super::TOL_GEOM,
        systole_estimate: 0.0,
        rep_id: OCTAGON_REP_ID,
    };

    // systole stand-in from the generators themselves (radius-1 sweep);
    // callers refine it against a ball via systole_lowerbound.
    let mut sys = f64::INFINITY;
    for l in Letter::alphabet(genus) {
        let len = rep
            .generator_image(l)
            .translation_length(rep.tol_geom)
            .expect("octagon generators are hyperbolic");
        sys = sys.min(len);
    }
    debug_assert!(sys.is_finite() && sys > 0.0);
    Ok(rep.with_systole(sys))
}

/// Orientation-preserving disk isometry sending the oriented pair
/// (p1 → p2) to (q1 → q2).
fn mapping_oriented(p1: Cx, p2: Cx, q1: Cx, q2: Cx) -> DiskMat {
    let dir = |base: Cx, other: Cx| -> f64 {
        other.sub(base).div(Cx::ONE.sub(base.conj().mul(other))).arg()
    };
    let phi = dir(q1, q2) - dir(p1, p2);
    DiskMat::translate(q1)
        .mul(DiskMat::rotate(phi))
        .mul(DiskMat::translate(p1.scale(-1.0)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::SurfacePresentation;
    use approx::assert_abs_diff_eq;

    #[test]
    fn relator_maps_to_identity() {
        let rep = octagon_rep(2).unwrap();
        let pres = SurfacePresentation::new(2);
        let m = rep.evaluate(pres.relator());
        assert_abs_diff_eq!(m.trace_abs(), 2.0, epsilon = 1e-9);
        assert!(m.distance_to_identity() < 1e-9, "{m:?}");
    }

    #[test]
    fn generators_hyperbolic_equal_lengths() {
        let rep = octagon_rep(2).unwrap();
        let lens: Vec<f64> = Letter::alphabet(2)
            .into_iter()
            .map(|l| {
                rep.generator_image(l)
                    .translation_length(1e-9)
                    .expect("hyperbolic")
            })
            .collect();
        for w in lens.windows(2) {
            assert_abs_diff_eq!(w[0], w[1], epsilon = 1e-9);
        }
        assert!(lens[0] > 0.1);
    }

    #[test]
    fn evaluate_is_a_homomorphism() {
        let rep = octagon_rep(2).unwrap();
        assert!(rep.evaluate(&Word::empty()).distance_to_identity() < 1e-12);
        let w = Word::parse("a1 b2 A2 a1 B1").unwrap();
        let ww = w.concat(&w.inverse());
        assert!(rep.evaluate(&ww).distance_to_identity() < 1e-12);
        for seed in 0..20 {
            let u = crate::word::random_word(2, 5, seed);
            let v = crate::word::random_word(2, 5, seed + 1000);
            let lhs = rep.evaluate(&u.concat(&v));
            let rhs = rep.evaluate(&u).compose(&rep.evaluate(&v));
            assert!(lhs.distance_to(&rhs) < 1e-9);
        }
    }

    #[test]
    fn genus_three_unsupported() {
        assert!(matches!(
            octagon_rep(3),
            Err(GeomError::UnsupportedGenus { genus: 3 })
        ));
    }
}
