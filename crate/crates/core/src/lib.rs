//! Exact arithmetic for integral Chevalley Lie algebras, Weyl-group
//! invariants over rings with 2-torsion, and adjoint-invariant polynomials.

pub mod adjinv;
pub mod cli;
pub mod error;
pub mod lattice;
pub mod lie;
pub mod poly;
pub mod ring;
pub mod rootsys;
pub mod space;
pub mod verify;
pub mod weyl;

pub use error::{Error, Result};
