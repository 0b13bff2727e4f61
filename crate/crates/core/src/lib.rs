//! Combinatorial knot calculus: validated planar-diagram codes, Seifert
//! graphs, low-order Vassiliev invariants with exact arithmetic,
//! quasipositivity certificates, and local tangle moves.

pub mod bracket;
pub mod braid;
pub mod diagram;
pub mod error;
pub mod gauss;
pub mod invariants;
mod passes;
pub mod poly;
pub mod seifert;
pub mod surgery;

pub use braid::BraidWord;
pub use diagram::{parse_pd, serialize, Crossing, CrossingId, Diagram, EdgeLabel, Format, Sign};
pub use gauss::parse_gauss;
pub use poly::LaurentPoly;
