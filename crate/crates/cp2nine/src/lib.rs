//! Kühnel's 9-vertex complex projective plane: construction, subdivision,
//! trisection, homology, and a numerical model of an explicit PL
//! homeomorphism onto CP².

pub mod catalog;
pub mod complex;
pub mod error;
pub mod geometry;
pub mod homology;
pub mod io;
pub mod iso;
pub mod label;
pub mod plmap;
pub mod report;
pub mod subdivision;
pub mod symmetry;
pub mod trisection;
pub mod verify;

pub use complex::{sx, Simplex, SimplicialComplex};
pub use error::{Error, Result};
pub use label::{lbl, Label};
pub use symmetry::Permutation;
