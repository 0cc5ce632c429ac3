//! Exact polyhedral computation for tropical geometry.
//!
//! The crate decides whether a pure polyhedral complex is connected through
//! codimension 1, builds the basic tropical objects (tropical hyperplanes,
//! uniform Bergman fans, tropical hypersurfaces, Newton-polygon root
//! valuations, images under monomial maps) and mechanizes the slicing
//! argument that walks between facets of a tropicalization by intersecting
//! with a generic tropical hyperplane.
//!
//! All arithmetic is exact over [`Rational`].
//!
//! ```
//! use tropconn::{uniform_bergman_fan, PolyhedralComplex};
//!
//! let delta = uniform_bergman_fan(4, 2).unwrap();
//! assert_eq!(delta.cells().len(), 10);
//! assert!(delta.is_connected_through_codim1().unwrap());
//! ```

pub mod complex;
pub mod error;
pub mod fm;
pub mod functional;
pub mod golden;
pub mod io;
pub mod linalg;
pub mod lp;
pub mod maps;
pub mod pipeline;
pub mod polyhedron;
pub mod rational;
pub mod tropical;

#[cfg(doctest)]
mod book;

pub use complex::{FacetGraph, PolyhedralComplex, ValidationReport};
pub use error::{Error, Result};
pub use fm::{fm_project, hull_from_generators};
pub use functional::AffineFunctional;
pub use lp::{lp_optimize, LpResult, Sense};
pub use maps::{change_coordinates, generic_basis, linear_image, IntegerMatrix};
pub use pipeline::{
    choose_slicing_translate, lift_walk, properness_check, slice, theorem_walk, walk_bfs, FacetWalk,
    PropernessReport, SliceCertificate,
};
pub use polyhedron::Polyhedron;
pub use rational::{q, QVector, Rational};
pub use tropical::{
    root_valuations, tropical_hyperplane, tropical_hypersurface, uniform_bergman_fan, RootValuationMultiset,
    TropicalPolynomial, ValuedUnivariate,
};
