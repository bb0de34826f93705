//! Exact ordinal arithmetic below `w^w` and the ordinal length of monomial
//! subquotients `I/J` of a polynomial ring.
//!
//! ```
//! use ordlen::{length_of, Ring, Subquotient};
//!
//! let ring = Ring::parse_vars("x,y,z").unwrap();
//! let j = ring.parse_ideal("x^2, x*y").unwrap();
//! let len = length_of(&Subquotient::ring(j)).unwrap();
//! assert_eq!(len.to_string(), "w^2 + w");
//! ```

pub mod cli;
pub mod error;
pub mod length;
pub mod monomial;
pub mod ordinal;
pub mod poset;

pub use error::{Error, Result};
pub use length::{fundamental_cycle, length_of, FundamentalCycle, Subquotient};
pub use monomial::{Monomial, MonomialIdeal, MonomialPrime, Ring};
pub use ordinal::{Ordinal, Term, Truncation};
pub use poset::FinitePoset;
