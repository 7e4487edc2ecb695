//! Exact enumeration, statistics and formula verification for (r-)Schröder
//! lattice paths.
//!
//! The crate covers two path families (integer slope and unit fraction),
//! their area codes, the area/dinv statistics and their q,t generating
//! polynomials, the parking functions attached to paths, the recursive
//! counting formulas for pentagon and hexagon sub-regions, and a verifier
//! that adjudicates each formula against brute-force oracles.

pub mod counting;
pub mod error;
pub mod lattice;
pub mod parking;
pub mod qalgebra;
pub mod recursions;
pub mod stats;
pub mod verifier;

pub use error::{CodeError, CountError, FormulaError, PathError, QAlgebraError, SpecError, StatError};
pub use lattice::{
    enumerate_paths, enumerate_region_paths, AreaCode, CodeEntry, LatticePath, PathSpec, Rat,
    Region, RegionHexagon, RegionPentagon, SlopeMode, Step,
};
pub use recursions::{
    BetaIndexMode, Evaluator, PschBoundaryMode, SplitIndexMode, VariantConfig,
};
pub use stats::{DinvVariant, Interpretation};
