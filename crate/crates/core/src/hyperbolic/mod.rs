//! The hyperbolic plane side: the octagon Fuchsian representation, axes,
//! linking at infinity, ε-traps, and the stability lemmas as numeric
//! procedures. Upper half-plane model; isometries are real 2×2 matrices of
//! determinant 1 up to sign; boundary points are projective (so ∞ needs no
//! special cases) and cyclic order on the circle runs through a fixed chart.

mod boundary;
mod context;
mod isometry;
mod octagon;
mod segment;

pub use boundary::{circle_angle, BoundaryPoint, GeodesicLine};
pub use context::{estimate_context, systole_lowerbound, CayleyContext};
pub use isometry::{Isometry, IsometryClass};
pub use octagon::{octagon_rep, FuchsianRep, OCTAGON_REP_ID};
pub use segment::{
    perturbing_isometry, stable_intersection_check, trap_segment, GeodesicSegment, TrapWitness,
};

/// Default geometric tolerance.
pub const TOL_GEOM: f64 = 1e-9;

/// Resolution floor below which two boundary points cannot be told apart at
/// all; independent of the user-facing tolerance.
pub const BOUNDARY_RESOLUTION: f64 = 1e-12;

#[derive(Debug, Clone, thiserror::Error)]
pub enum GeomError {
    #[error("isometry is not hyperbolic (|trace| = {abs_trace:.6} ≤ 2 + tol); {class:?}")]
    NotHyperbolic {
        abs_trace: f64,
        class: IsometryClass,
    },
    #[error("degenerate boundary configuration: endpoints {which} are {gap:.3e} apart (tolerance {tol:.3e}); increase precision or perturb")]
    DegenerateConfiguration {
        which: &'static str,
        gap: f64,
        tol: f64,
    },
    #[error("lines do not cross (unlinked endpoints)")]
    NotCrossing,
    #[error("segment too short: length {len:.6} must exceed {needed:.6}")]
    SegmentTooShort { len: f64, needed: f64 },
    #[error("epsilon too large: 8·eps = {eight_eps:.6} must be below the systole estimate {systole:.6}")]
    EpsilonTooLarge { eight_eps: f64, systole: f64 },
    #[error("octagon representation is only constructed for genus 2 (requested {genus})")]
    UnsupportedGenus { genus: u8 },
}
