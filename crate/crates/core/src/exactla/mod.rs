//! Exact integer linear algebra over arbitrary precision integers.

mod abgroup;
mod lattice;
mod matrix;
mod normal_form;
mod span;

pub use abgroup::{
    exterior_square, l2, mod_m, tensor, tensor_elem, tor, wedge_elem, wedge_index, AbMap, FgAbGroup,
    SubgroupOf, TorGenerator,
};
pub use lattice::{Lattice, LatticeQuotient};
pub use matrix::{int, IntMatrix};
pub use normal_form::{ext_gcd, hnf, snf};
pub use span::SpanMap;

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ExactError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("sublattice condition violated: basis row {row} of the smaller lattice is not in the larger one")]
    NotSublattice { row: usize },
    #[error("vector is not in the lattice")]
    NotMember,
    #[error("map is not well defined: relation {relation} of the domain does not map to zero")]
    IllDefined { relation: usize },
    #[error("maps are not composable")]
    NotComposable,
}

#[cfg(test)]
mod tests;
