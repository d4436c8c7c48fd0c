//! Finite-dimensional normed-space geometry: norm oracles, faces and
//! duality maps, rotundity / smoothness / ACS / HLUR checkers, the Daugavet
//! equation and farthest points.
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]

extern crate alloc;

pub mod daugavet;
pub mod error;
pub mod faces;
pub mod farthest;
pub mod linalg;
pub mod optimize;
pub mod properties;
pub mod rng;
pub mod space;
pub mod verdict;

pub use error::{GeomError, Result};
pub use space::{Functional, NormFamily, NormedSpace, Vector};
pub use verdict::{Certificate, ProbeConfig, Status, Verdict};
