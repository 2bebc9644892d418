//! Counting distinct colorings of a finite set under a permutation group at a
//! fixed color concentration.
//!
//! ```
//! use polya::{polya_count, Concentration, Group};
//!
//! // two black and two white corners of a square, up to its 8 symmetries
//! let square = Group::dihedral(4)?;
//! let count = polya_count(&square, &Concentration::new(vec![2, 2])?)?;
//! assert_eq!(count, 2u32.into());
//! # Ok::<(), polya::Error>(())
//! ```
//!
//! The counting engine extracts one coefficient from each distinct cycle-index
//! product without expanding it. The [`oracle`] module holds brute-force
//! counterparts used to check it. The guide in `book/` walks through the
//! method chapter by chapter; its code listings are compiled as doctests.

pub mod cycle_index;
pub mod engine;
mod error;
pub mod group;
pub mod oracle;
pub mod perm;

pub use cycle_index::{ExponentDomain, Factor, PolyaProduct, WeightedProducts};
pub use engine::{
    binomial, coefficient_for_product, multinomial, polya_count, polya_tally, polya_tally_parallel,
    BigCount, Concentration, PolyaTally,
};
pub use error::{Error, Result};
pub use group::{Group, ValidationReport};
pub use perm::{CycleStructure, Permutation};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/permutations.md")]
    mod permutations {}
    #[doc = include_str!("../../../book/src/cycle-index.md")]
    mod cycle_index {}
    #[doc = include_str!("../../../book/src/coefficients.md")]
    mod coefficients {}
    #[doc = include_str!("../../../book/src/oracles.md")]
    mod oracles {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
