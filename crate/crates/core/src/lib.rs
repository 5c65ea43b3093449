//! Standard pairs, primary decompositions and associated-prime chain audits
//! for monomial and pure-difference binomial ideals, together with the
//! integer lattice machinery needed to check A-gradedness.
//!
//! The crate is organised bottom-up:
//!
//! * [`exponents`]: exponent vectors and monomial ideals
//! * [`standard_pairs`]: the standard-pair basis of a staircase
//! * [`decomposition`]: primary components and the chain audit of their primes
//! * [`grading`]: fibers of the grading map A and the checks built on them,
//!   up to bounded enumeration of A-graded ideals
//! * [`groebner`] and [`toric`]: binomial Buchberger and toric ideals
//! * [`saturated`]: the difference lattice K(I), saturation and the fiber
//!   properties of binomial ideals
//! * [`counterexample`]: the sixteen-variable ideal in dimension three whose
//!   associated primes break the chain property
//! * [`io`]: the plain-text ideal and matrix formats

pub mod counterexample;
pub mod decomposition;
pub mod error;
pub mod exponents;
pub mod grading;
pub mod groebner;
mod hitting;
pub mod io;
pub mod linalg;
pub mod saturated;
pub mod standard_pairs;
pub mod toric;

pub use error::{Error, Result};
pub use exponents::{ExponentVector, MonomialIdeal};
pub use standard_pairs::{Face, StandardPair, StandardPairBasis};
