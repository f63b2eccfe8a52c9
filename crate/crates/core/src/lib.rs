//! Exact tropical-cluster machinery for sl3-laminations on marked surfaces.
//!
//! Everything is computed in exact rational arithmetic: exchange seeds and
//! their tropical X/A-mutations, the amalgamated quiver of an ideal
//! triangulation, flips, the tropicalized Casimir map, the lamination exact
//! sequence, Weyl-group and Dynkin actions at punctures (both as end
//! rewriting and as cluster PL maps), and the golden coordinate tables for
//! elementary braids on the once-punctured disk.

pub mod catalog;
pub mod chart;
pub mod ends;
pub mod error;
pub mod fixtures;
pub mod lattice;
pub mod linalg;
pub mod maps;
pub mod quiver;
pub mod rat;
pub mod seed;
pub mod surface;
pub mod verify;

pub use error::{Error, Result};
pub use rat::Rat;
