//! The exact sequence-and-matrix side of the calculus.

pub mod matrix;
pub mod named;
pub mod sequence;

pub use matrix::AugMatrix;
pub use sequence::{seq_cone, seq_join, shift, AugSequence, Scalar, Tail};
