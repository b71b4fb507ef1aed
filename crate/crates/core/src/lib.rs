//! Long virtual knots as based Gauss diagrams: Reidemeister moves, the four
//! projections to signed chord diagrams, their Jones polynomials and their
//! Khovanov homology over Z/2.

pub mod bracket;
pub mod cli;
pub mod error;
pub mod gauss;
pub mod gf2;
pub mod khovanov;
pub mod maps;
pub mod moves;
pub mod poly;
pub mod search;
pub mod state;

pub use bracket::{four_jones, jones, kauffman_bracket};
pub use error::{Error, Result};
pub use gauss::{parse_gauss_code, BasedGaussDiagram, Chord, FlatWord, Letter, PseudoDiagram, Sign};
pub use khovanov::{homology_dims, kh_four, GradedDims};
pub use maps::{four_projections, FourWay, MapKind};
pub use moves::{apply_move, enumerate_moves, random_walk, MoveKind, MoveSpec};
pub use poly::{LaurentPoly, Var};
