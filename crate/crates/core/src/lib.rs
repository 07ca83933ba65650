//! Exact intersection-searching structures in three-space.
//!
//! The crate preprocesses *plates* (triangles and circular disks) and
//! *arcs* (segments, circular and conic arcs, parametric algebraic arcs)
//! into query structures built from verified polynomial partitions,
//! cylindrical algebraic decomposition labels, and point-partitioning
//! range trees. Every predicate bottoms out in exact rational or real
//! algebraic arithmetic; floating point is used only as a filter.
//!
//! The crate is `no_std` + `alloc`; all IO, file formats and the CLI live
//! in the companion `plarc-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod algebra;
pub mod arcs_amid_plates;
pub mod cad;
pub mod config;
pub mod geometry;
pub mod oracle;
pub mod partition;
pub mod plate_plate;
pub mod plates_amid_arcs;
pub mod rangesearch;

pub use algebra::{AlgebraicNumber, MultiPoly, Rational, Scalar, Sign, Var};
pub use config::Config;
