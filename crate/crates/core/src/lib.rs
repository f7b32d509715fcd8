//! Fibers, multigraded Betti numbers and generalized Scarf complexes of
//! lattice ideals `I_L ⊂ k[x_1, …, x_n]` for pointed lattices `L ⊂ Z^n`.

pub mod cli;
pub mod error;
pub mod fiber;
pub mod homology;
pub mod lattice;
pub mod linalg;
pub mod lp;
pub mod scarf;

pub use error::{Error, Result};
pub use fiber::{enumerate_fiber, DegreeScan, Fiber, Monomial};
pub use homology::{betti_scan, BettiTable, Field};
pub use lattice::{lattice_from_semigroup, DegreeClass, LatticeBasis, SemigroupMatrix};
