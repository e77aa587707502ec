//! Exact polyhedral toolkit for tight-spans of metrics, symmetric and
//! directed maps, diversities and k-dissimilarities.
//!
//! Every map is reduced to an envelope polyhedron over a point
//! configuration; tight-spans are complexes of bounded faces, regular
//! subdivisions come from lifted polyhedra, and tree structure is
//! decided through splits and exact split decomposition.  All
//! arithmetic is rational; there is no floating point anywhere in the
//! compute path.

pub mod config;
pub mod engine;
pub mod error;
pub mod ground;
pub mod io;
pub mod linalg;
pub mod lp;
pub mod maps;
pub mod num;
pub mod polyhedron;
pub mod trees;
pub mod vector;

pub use error::{Error, Result};
pub use ground::GroundSet;
pub use num::Rational;
pub use vector::QVector;
