//! Exact computations in integral group rings of finite groups.
//!
//! Every quotient that appears in the theory of Fox quotients is realised here
//! as a quotient of two sublattices of `Z^|G|`, turned into a finitely generated
//! abelian group by Smith normal form. The crate is layered:
//!
//! * [`exactla`]: integer matrices, Hermite and Smith normal forms, lattices,
//!   finitely generated abelian groups and homomorphisms between them.
//! * [`groups`]: finite groups as multiplication tables, subgroups, N-series.
//! * [`groupring`]: the group ring `Z(G)`, ideals, filtrations, Fox modules.
//! * [`tensor_h`]: module quotients over `Z(H)`, tensor products over `H`,
//!   pushout / exactness / decomposition checkers and the second-quotient theorems.
//! * [`lie`]: graded Lie rings, the degree three enveloping presentation and
//!   the kernel operators of the third Fox quotient.
//! * [`report`] and [`corpus`]: the verification harness.
//! * [`cli`]: the commands of the `foxcalc` binary.

pub mod cli;
pub mod corpus;
pub mod exactla;
pub mod groupring;
pub mod groups;
pub mod lie;
pub mod report;
pub mod tensor_h;

pub use num_bigint::BigInt;
