//! Basic fiber components, the generalized Scarf complex and the chain
//! complexes built from it.

mod binomials;
mod complex;
mod components;
mod subset;

pub use binomials::{
    indispensable_binomials, indispensable_binomials_in, minimal_generators, minimal_generators_in,
    Binomial,
};
pub use complex::{
    algebraic_scarf_subcomplex, build_generalized_scarf_complex, is_homogeneous,
    strongly_algebraic_subcomplex, verify_zero_composition, AlgebraicComplex, Entry,
    SignedMonomial, StrongMode,
};
pub use components::{
    basic_components, basic_components_of, enumerate_scarf_poset, is_basic_fiber, translate_leq,
    witness_of, BasicComponent, ScarfPoset,
};
pub use subset::{bmax, in_generalized_scarf, monomials_of, vsupp, Bmax, LatticeSubset};
