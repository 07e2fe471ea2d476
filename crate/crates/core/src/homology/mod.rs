//! Multigraded Betti numbers of `S/I` for monomial ideals `I`, and from them
//! projective dimension and depth (`depth S/I = n - pd S/I`).
//!
//! The main route reads `β_{i+1,b}(S/I) = dim H̃_{i-1}(K^b(I))` off the upper
//! Koszul complexes `K^b(I)`. [`betti_via_taylor`] computes the same numbers from
//! the Taylor resolution and serves as an independent oracle.

mod betti;
mod complex;
mod rank;
mod taylor;

pub use betti::{
    betti_table, betti_table_with, depth, projective_dimension, BettiEntry, BettiTable,
    GridSweep,
};
pub use complex::{reduced_homology_ranks, upper_koszul_complex, ReducedHomology, SimplicialComplex};
pub use rank::matrix_rank;
pub use taylor::{betti_via_taylor, TAYLOR_MAX_GENERATORS};

use crate::error::{Error, Result};

/// Coefficient field, identified by its characteristic.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub enum FieldSpec {
    #[default]
    Rationals,
    Prime(u32),
}

impl FieldSpec {
    pub fn from_characteristic(c: u32) -> Result<Self> {
        match c {
            0 => Ok(FieldSpec::Rationals),
            p if is_prime(p) => Ok(FieldSpec::Prime(p)),
            other => Err(Error::InvalidCharacteristic(other)),
        }
    }

    pub fn characteristic(self) -> u32 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => p,
        }
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let p = u64::from(p);
    (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn characteristics() {
        assert_eq!(FieldSpec::from_characteristic(0), Ok(FieldSpec::Rationals));
        assert_eq!(FieldSpec::from_characteristic(2), Ok(FieldSpec::Prime(2)));
        assert_eq!(FieldSpec::from_characteristic(65521), Ok(FieldSpec::Prime(65521)));
        assert_eq!(FieldSpec::from_characteristic(1), Err(Error::InvalidCharacteristic(1)));
        assert_eq!(FieldSpec::from_characteristic(9), Err(Error::InvalidCharacteristic(9)));
        assert_eq!(FieldSpec::Prime(3).characteristic(), 3);
    }
}
