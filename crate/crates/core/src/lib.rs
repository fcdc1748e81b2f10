//! Painted crushtacean graphs: validation, automorphism groups, symmetry
//! classification and family generation for flat fully augmented links.

pub mod automorphism;
pub mod crushtacean;
pub mod error;
pub mod families;
pub mod graph;
pub mod io;
pub mod permgroup;

pub use automorphism::{automorphisms, find_isomorphism};
pub use crushtacean::{
    classify_bprime, knot_circles, nerve_check, symmetry_report, validate_crushtacean,
    ClassificationReport,
};
pub use error::{Error, Result};
pub use graph::{planar_embed, PaintedGraph, RotationSystem};
pub use io::GraphDocument;
pub use permgroup::{identify, GroupId, PermGroup, Permutation};
