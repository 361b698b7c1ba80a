//! Orbit functions of finite Weyl groups and their transforms.

pub mod analysis;
pub mod error;
pub mod linalg;
pub mod orbitalg;
pub mod orbitfn;
pub mod rootsys;
pub mod transforms;
pub mod weyl;

pub use error::{Error, Result};
pub use linalg::{C64, Q};
pub use rootsys::{Basis, DiagramId, Family, OrthPoint, RootSystem, Weight};
