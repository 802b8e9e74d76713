//! Exact computations with fundamental representations of Yangians.
//!
//! Walks the extremal path of a fundamental weight along a reduced word of the
//! longest Weyl group element, extracting at each step the associated
//! polynomial of the `sl2` restriction. From the walks it builds the T and S
//! sets that decide when an ordered tensor product of fundamental modules is
//! highest weight (or irreducible), and orders the roots of a tuple of
//! polynomials into a cyclic tensor product. Everything is exact:
//! `BigRational` coefficients, polynomials in the spectral parameter `a`,
//! and truncated series in `u^{-1}`.
//!
//! ```
//! use yangian::root_system::{g2, ReducedWord};
//! use yangian::transport::run_walk;
//!
//! let report = run_walk(&g2(), &ReducedWord(vec![1, 2, 1, 2, 1, 2]), 2, 8).unwrap();
//! let last = report.records.last().unwrap();
//! assert_eq!(last.factored().unwrap(), "(u - (a + 5))");
//! ```

pub mod cli;
pub mod cyclicity;
pub mod error;
pub mod exact;
pub mod reference;
pub mod root_system;
pub mod transport;
pub mod verify;
pub mod ysl2;
