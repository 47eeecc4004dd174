//! Combinatorial calculus of augmented semi-simplicial sets.
//!
//! Two parallel worlds, connected by the sequential cardinal functor:
//!
//! * **Geometric** ([`sscore`], [`actions`]): augmented semi-simplicial sets
//!   with face maps only, their joins and cones, cylinder constructions, and
//!   barycentric subdivision realized as colimit actions of
//!   co-semi-simplicial objects.
//! * **Algebraic** ([`seqmat`]): exact integer sequences indexed from -1 and
//!   the infinite triangular matrices (binomial, cylinder, chain-count) that
//!   act on them.
//!
//! Taking level-wise cardinalities turns each geometric construction into
//! the corresponding matrix action; [`verify`] bundles the checks that make
//! this precise on concrete complexes.

pub mod actions;
pub mod combinat;
pub mod error;
pub mod seqmat;
pub mod sscore;
pub mod verify;

pub use error::{Error, Result};
