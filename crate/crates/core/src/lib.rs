//! Minimal graded projective resolutions over finitely presented graded quiver
//! algebras, bigraded Yoneda Ext algebras, and the Koszul / d-Koszul /
//! piecewise-Koszul classification built on them.

pub mod algebra;
pub mod corpus;
pub mod error;
pub mod ext;
pub mod groebner;
pub mod modules;
pub mod presentation;
pub mod resolution;
pub mod scalars;
pub mod structure;

pub use error::{Error, Result};

pub use algebra::GradedAlgebra;
pub use ext::{DeltaFunction, ExtTable, Verdict};
pub use groebner::{algebra_from_presentation, MonomialOrder};
pub use modules::{ModulePresentation, ModuleSpec, Part};
pub use presentation::{AlgebraElement, Quiver, QuiverPresentation};
pub use resolution::{minimal_resolution, resolve_trivial, BettiTable, Resolution};
pub use scalars::PrimeField;
pub use structure::StructureConstants;
