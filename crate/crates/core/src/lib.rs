//! Exact computations on edge ideals of graphs and their symbolic powers.
//!
//! The crate is `no_std` (it needs `alloc`). It provides
//!
//! * [`monomial`]: monomials and monomial ideals with canonical minimal generators,
//! * [`graph`]: dense simple graphs with chordality, vertex covers and star packings,
//! * [`constructions`]: edge ideals, powers of cover primes and symbolic powers,
//! * [`homology`]: multigraded Betti numbers, projective dimension and depth of `S/I`,
//! * [`verify`]: depth certificates and executable checks of the depth lower bounds
//!   in terms of the star packing number.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod constructions;
pub mod error;
pub mod graph;
pub mod homology;
pub mod monomial;
pub mod verify;

pub use constructions::{
    edge_ideal, mixed_ideal, prime_power, symbolic_power, symbolic_power_with_cap,
    CoverPrimeDecomposition, DEFAULT_GENERATOR_CAP,
};
pub use error::{Error, Result};
pub use graph::{Chordality, Graph, StarPacking, VertexSet, MAX_VERTICES};
pub use homology::{
    betti_table, betti_via_taylor, depth, projective_dimension, BettiEntry, BettiTable,
    FieldSpec, SimplicialComplex,
};
pub use monomial::{Monomial, MonomialIdeal};
