//! Quadratization of pseudo-Boolean polynomials.
//!
//! A polynomial over binary variables is rewritten as a quadratic one over
//! the original variables plus auxiliaries, such that minimizing over the
//! auxiliaries gives back the original function. Two reductions are
//! provided: [`mono_red`] handles one monomial at a time, and [`symm_red`]
//! first extracts blocks of identical-coefficient monomials and reduces each
//! block with a single gadget.
//!
//! ```
//! use quadratize::{parse_polynomial, symm_red, check_equivalence, AuxAllocator};
//!
//! let p = parse_polynomial("1 x1 x2 x3\n1 x1 x2 x4\n1 x1 x3 x4\n1 x2 x3 x4\n").unwrap();
//! let out = symm_red(&p, &mut AuxAllocator::new()).unwrap();
//! assert!(out.quadratic.degree() <= 2);
//! assert!(check_equivalence(&p, &out).unwrap().equivalent);
//! ```

pub mod bench;
pub mod cli;
pub mod coloring;
pub mod error;
pub mod oracle;
pub mod pbpoly;
pub mod reduction;

pub use coloring::{utility_polynomial, ColoringEncoding, Graph};
pub use error::{Error, Result};
pub use oracle::{brute_force_min, check_equivalence, min_over_aux, EquivalenceReport};
pub use pbpoly::format::{parse_polynomial, write_polynomial};
pub use pbpoly::{Assignment, Monomial, Polynomial, SymmetricBlock, VarId, VarKind};
pub use reduction::{
    max_symm, mono_red, reduce_symmetric, symm_red, symm_red_with, AuxAllocator,
    ReductionCoefficients, ReductionOutcome, Sign, SymmRedOptions,
};
