//! Cotangent bundles of cominuscule Grassmannians: exterior powers, their
//! Levi decompositions, minimal twists with sections, and the rank-`p`
//! foliations that realize them.

pub mod catalog;
pub mod error;
pub mod exec;
pub mod foliations;
pub mod partitions;
pub mod plethysm;
pub mod rootsys;
pub mod tables;
pub mod twists;

pub use catalog::{make_spec, GrassmannianSpec, SpaceFamily};
pub use error::{Error, Result};
pub use exec::Exec;
pub use num_bigint::BigUint;
pub use partitions::Partition;
pub use rootsys::{Family, LieType, RootSystem, Weight};
