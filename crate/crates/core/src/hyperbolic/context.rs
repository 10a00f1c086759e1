//! Measured coarse-geometry constants: quasi-isometry fit between the word
//! metric and the orbit metric, a thin-triangle estimate, and the systole
//! stand-in. All values are empirical over a finite ball and carry the
//! measurement radius.

use serde::{Deserialize, Serialize};

use crate::ball::BallTable;
use crate::word::Word;

use super::octagon::FuchsianRep;

/// Coarse constants of the Cayley graph, as measured on a ball.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CayleyContext {
    pub genus: u8,
    pub measurement_radius: usize,
    /// (1/K)·d_word − ε ≤ d_hyp(x₀, g·x₀) ≤ K·d_word + ε on the ball.
    pub qi_k: f64,
    pub qi_eps: f64,
    /// Finer affine bounds actually observed: lo·d_word − c_lo ≤ d_hyp and
    /// d_hyp ≤ hi·d_word + c_hi; used for search-radius suggestions.
    pub slope_lo: f64,
    pub slope_hi: f64,
    /// Max thin-triangle defect over sampled geodesic triangles.
    pub delta_estimate: f64,
    pub delta_samples: usize,
}

/// Fit the quasi-isometry constants and a thin-triangle estimate on the ball.
pub fn estimate_context(rep: &FuchsianRep, ball: &BallTable) -> CayleyContext {
    assert!(ball.radius() >= 4, "context estimation needs radius ≥ 4");
    let mut slope_hi = 0.0f64;
    let mut slope_lo = f64::INFINITY;
    for id in 1..ball.len() as u32 {
        let w = ball.word_of(id);
        let dw = ball.length_of(id) as f64;
        let dh = rep.displacement(&w);
        slope_hi = slope_hi.max(dh / dw);
        slope_lo = slope_lo.min(dh / dw);
    }
    // Spec-shaped (K, ε): K covers the upper slope, then ε absorbs whatever
    // the lower bound still misses (with these slopes it ends up 0).
    let qi_k = slope_hi.max(1.0);
    let mut qi_eps = 0.0f64;
    for id in 1..ball.len() as u32 {
        let w = ball.word_of(id);
        let dw = ball.length_of(id) as f64;
        let dh = rep.displacement(&w);
        qi_eps = qi_eps.max(dh - qi_k * dw).max(dw / qi_k - dh);
    }

    let (delta_estimate, delta_samples) = thin_triangle_estimate(rep, ball);

    CayleyContext {
        genus: rep.genus(),
        measurement_radius: ball.radius(),
        qi_k,
        qi_eps: qi_eps.max(0.0),
        slope_lo,
        slope_hi,
        delta_estimate,
        delta_samples,
    }
}

/// Max over sampled triangles (id, x, y) of the distance from a point on the
/// side [x,y] to the union of the other two sides, in the word metric.
fn thin_triangle_estimate(_rep: &FuchsianRep, ball: &BallTable) -> (f64, usize) {
    let pres = ball.presentation();
    let sample_radius = ball.radius().min(4);
    let mut delta = 0.0f64;
    let mut samples = 0usize;
    let mut pick = Vec::new();
    for (i, seed) in (0..60u64).enumerate() {
        let len = 2 + (i % (sample_radius - 1));
        pick.push(crate::word::random_word(pres.genus(), len, 7_000 + seed));
    }
    for (i, x) in pick.iter().enumerate() {
        let y = &pick[(i + 17) % pick.len()];
        let side_xy = geodesic_chain(pres, x, y);
        let side_x = geodesic_chain(pres, &Word::empty(), x);
        let side_y = geodesic_chain(pres, &Word::empty(), y);
        samples += 1;
        for p in &side_xy {
            let mut best = usize::MAX;
            for q in side_x.iter().chain(side_y.iter()) {
                let d = pres.geodesic_length(&p.inverse().concat(q));
                best = best.min(d);
            }
            delta = delta.max(best as f64);
        }
    }
    (delta, samples)
}

/// Group elements along a geodesic from u to v: u · (prefixes of nf(u⁻¹v)).
fn geodesic_chain(
    pres: &crate::presentation::SurfacePresentation,
    u: &Word,
    v: &Word,
) -> Vec<Word> {
    let path = pres.canonical(&u.inverse().concat(v));
    let mut out = Vec::with_capacity(path.len() + 1);
    for k in 0..=path.len() {
        out.push(u.concat(&Word::new(path.letters()[..k].to_vec())));
    }
    out
}

/// Minimum translation length over nontrivial ball elements: an upper bound
/// for the true systole realized by short words, used as the systole for
/// ε-selection. Monotone nonincreasing in the radius.
pub fn systole_lowerbound(rep: &FuchsianRep, ball: &BallTable) -> f64 {
    assert!(ball.radius() >= 4, "systole sweep needs radius ≥ 4");
    let mut best = f64::INFINITY;
    for id in 1..ball.len() as u32 {
        let w = ball.word_of(id);
        let m = rep.evaluate(&w);
        let len = m
            .translation_length(rep.tol_geom)
            .expect("nontrivial surface-group elements are hyperbolic");
        best = best.min(len);
    }
    best
}
