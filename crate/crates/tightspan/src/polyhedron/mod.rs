//! H-representation polyhedra with exact vertex/ray enumeration, face
//! lattices, bounded-face complexes and LP-backed predicates.

mod bits;
mod dd;
mod faces;
mod hrep;
mod predicates;

pub use bits::BitSet;
pub use dd::{cone_extreme_rays, dd_convert, facets_from_vrep, VRepresentation};
pub use faces::{
    bounded_faces, bounded_faces_from, complex_from_lattice, edge_length, face_lattice,
    BoundedComplex, ComplexFace, Face, FaceLattice,
};
pub use hrep::HPolyhedron;
pub use predicates::{
    in_relative_interior, inequality_valid, is_bounded_from_below, is_minimal_element,
    relint_point,
};

/// Default dimension cap for full enumeration; beyond it only the
/// LP-based predicates are offered.
pub const DEFAULT_DIM_CAP: usize = 16;

/// Hard guard on the number of inequality rows a single enumeration may
/// process.
pub const DEFAULT_ROW_CAP: usize = 4096;
