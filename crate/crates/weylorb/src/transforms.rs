//! Discrete and continuous orbit-function transforms.
//!
//! * [`grid`]: the grids F_M in the fundamental domain and the tori T_m.
//! * [`plan`]: a generic analysis/synthesis pair with a Gram check.
//! * [`finite`]: the finite antisymmetric orbit-function transform on F_M.
//! * [`dct`]: one-dimensional discrete sine/cosine transforms and DCT/DST-1..4.
//! * [`multivariate`]: antisymmetric and symmetric multivariate versions.
//! * [`continuous`]: quadrature versions of the integral transforms.

pub mod continuous;
pub mod dct;
pub mod finite;
pub mod grid;
pub mod multivariate;
pub mod plan;

pub use continuous::QuadSpec;
pub use dct::{dst_dct_1d, Kind1d};
pub use finite::TransformPlan;
pub use grid::{grid_fm, tm_expand, tm_points, GridFM, GridPoint};
pub use multivariate::{multivariate_discrete, MultiKind, MultiPlan};
pub use plan::{DiscretePlan, Direction};
