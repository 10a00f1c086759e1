//! Crossing numbers of conjugacy classes in closed hyperbolic surface
//! groups, Epstein–Fujiwara counting quasimorphisms on the Cayley graph, and
//! table-certified lower bounds on word length with respect to the
//! characteristic generating sets S_n of bounded crossing number.
//!
//! Everything is desk scale: exact shortlex normal forms and ball
//! enumeration on the combinatorial side, a fixed regular-octagon Fuchsian
//! representation on the geometric side, and measured stand-ins (reported
//! with their provenance) for the constants that the theory leaves
//! existential.

pub mod ball;
pub mod key;
pub mod letters;
pub mod presentation;
pub mod hyperbolic;
pub mod word;

pub use ball::{enumerate_ball, BallTable, EnumLimits, GroupError};
pub use letters::Letter;
pub use presentation::SurfacePresentation;
pub use word::{random_word, CyclicWord, Word};
