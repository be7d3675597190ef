//! Exact combinatorics of spherical varieties in the Luna-Vust picture:
//! homogeneous spherical data, colored fans, localization of a datum at
//! an orbit, the colored fan of an orbit closure, and the intersection
//! of color closures with an orbit. All arithmetic is exact rational.

pub mod cli;
pub mod closure;
pub mod cone;
pub mod datum;
pub mod document;
pub mod error;
pub mod fan;
pub mod intersect;
pub mod linalg;
pub mod localize;
pub mod roots;

#[cfg(test)]
pub(crate) mod testdata;

pub use cone::Cone;
pub use datum::{full_colors, valuation_cone, Color, ColorKind, ColorSet, HomogeneousSphericalDatum};
pub use error::{Error, Result, ValidationReport};
pub use fan::{
    colored_faces, complete_fan, is_colored_face, is_complete, orbit_poset, validate_colored_cone,
    validate_fan, ColoredCone, ColoredFan, DatumContext, OrbitPoset,
};
pub use intersect::{intersect_color, multiplicity_cross_check, FormalColorSum};
pub use linalg::{hnf, integer_kernel, primitive_generator, restrict_functional, Int, IntLatticeBasis, Rat};
pub use localize::{check_refinement, cross_validate, full_colors_of_orbit, localize, OrbitDatum, Refinement};
pub use roots::{parse_root_system, Character, RootSystem};
