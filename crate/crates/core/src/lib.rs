//! Oblique Janowski domains `((1 + Az)/(1 + Bz))^alpha`: image geometry,
//! extremal bounds of the powered map, sector and radius computations, special
//! functions, and a sampling oracle for subordination claims.

pub mod cli;
pub mod cmath;
pub mod envelope;
pub mod error;
pub mod moebius;
pub mod oracle;
pub mod quadrature;
pub mod radius;
pub mod roots;
pub mod sector;
pub mod special;

pub use cmath::C64;
pub use error::{JanowskiError, Result};
pub use moebius::JanowskiParams;
