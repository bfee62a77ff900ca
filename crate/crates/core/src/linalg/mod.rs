//! Exact linear algebra: integer lattices in Hermite normal form and
//! subspaces of F2^n in reduced echelon form.

pub mod f2;
pub mod hnf;

pub use f2::{null_space, F2Space};
pub use hnf::IntLattice;
