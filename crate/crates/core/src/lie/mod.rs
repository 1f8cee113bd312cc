//! Graded Lie rings of N-series, the degree three part of the enveloping
//! bimodule `U^𝒢(G, H)` by generators and relations, and the operators
//! `θ`, `δ_1`, `δ_2` and `R_3` describing the third Fox quotient.

mod graded;
mod ops;
mod u3;

pub use graded::{l2_gh, l33, GradedLieRing, HeightTuple, EXHAUSTIVE_ORDER};
pub use ops::{cor65, delta1_corruption, low_degree_isos, r3_checks, thm61, u3bar_finite, Corruption};
pub use u3::{binom2, ElementU3, U3Pres};

use crate::exactla::ExactError;
use crate::groups::GroupError;
use crate::tensor_h::TensorError;
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum LieError {
    #[error("bracket is not well defined on representatives {0}")]
    BracketNotWellDefined(String),
    #[error("no bracket preimage for {0}")]
    NoBracketPreimage(String),
    #[error("no lift found: {0}")]
    NoLift(String),
    #[error("{0}")]
    NotInSubgroup(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Tensor(#[from] TensorError),
}
