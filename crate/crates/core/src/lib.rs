//! Semigroup polynomials, Kronecker and cyclotomic factorizations,
//! complete-intersection certificates for numerical semigroups, Hilbert
//! series tools for graded algebras, and a survey harness checking that
//! cyclotomic numerical semigroups are complete intersections.

pub mod cli;
pub mod cyclotomy;
pub mod error;
pub mod hilbert;
pub mod intpoly;
pub mod numsgp;
pub mod survey;

pub use cyclotomy::{
    cyclotomic, euler_phi, exponent_sequence, is_kronecker, kronecker_factor, moebius,
    reconstruct_from_exponents, CyclotomicFactorization, ExponentSequence,
};
pub use error::{Error, Result};
pub use intpoly::{IntPoly, SeriesTruncation};
pub use numsgp::{
    enumerate_semigroups, is_complete_intersection, two_generator_factorization, CiWitness, Limit,
    NumericalSemigroup,
};
