//! Module quotients over `Z(H)`, tensor products over `H`, diagram checkers
//! (pushout, exactness, decomposition) and the second-quotient theorems.

mod checks;
mod hmodule;
mod maps;
mod theorems;

pub use checks::{
    decomposition_check, exactness_check, fmt_vec, iso_verdict, pushout_check, same_invariants, subgroup_equality,
    surjectivity_check, Square, Verdict,
};
pub use hmodule::{tensor_over_h, HModuleQuotient, TensorH};
pub use maps::{named_map, phi_g, psi_n, zeta_n, MapKind};
pub use theorems::{
    cor24_abelian, cor24_cyclic, cor32, corrupt_sweep, lemma11, prop31, thm110, thm15, thm33, thm36, thm66, Diagram23,
    Square24, Square39,
};

use crate::exactla::ExactError;
use crate::groups::GroupError;
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum TensorError {
    #[error("the {lattice} lattice is not stable under {element} (basis row {row})")]
    NotStable { lattice: String, element: String, row: usize },
    #[error("action matrices are not compatible: generator {generator}, element {element}")]
    NotAnAction { generator: String, element: String },
    #[error("tensor over H needs a right module on the left and a left module on the right")]
    WrongSides,
    #[error("modules are over different generating sets of H")]
    DifferentActingGroups,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

#[cfg(test)]
mod tests;
