//! Augmented semi-simplicial sets and the combinatorial subcomplexes of
//! unit simplices used as concrete test beds.

pub mod augsset;
pub mod subset;

pub use augsset::{AugSSet, Level};
pub use subset::SubsetComplex;
