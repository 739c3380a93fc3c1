//! Chiral polyhedra and their symmetry groups from quaternionic Coxeter
//! systems.
//!
//! The crate builds the four rank-3 reflection groups A1³, A3, B3 and H3 as
//! sets of quaternion pairs `[p, q]` and `[p, q]*`, constructs solids as
//! unions of group orbits, turns vertex sets into convex meshes, and decides
//! chirality by searching the proper rotations for a map onto the mirror
//! image.

pub mod analysis;
pub mod catalog;
pub mod coxeter;
pub mod error;
pub mod export;
pub mod field;
pub mod hull;
pub mod orbit;
pub mod quaternion;
pub mod roots;
pub mod solids;
pub mod verify;

pub use analysis::{analyze, chirality_test, set_equal, AnalysisReport, ChiralityReport};
pub use catalog::{build, NamedSolid, Solid, SolidOptions};
pub use coxeter::{CoxeterSystem, DiagramId, DynkinVector, FiniteGroup, GroupKind};
pub use error::{Error, Result};
pub use field::ExactScalar;
pub use hull::{build_faces, Point, Polyhedron};
pub use orbit::Orbit;
pub use quaternion::{GroupElement, Quaternion, Scalar, POINT_TOLERANCE};
pub use solids::{Handedness, SolidKind, SolidSpec};
