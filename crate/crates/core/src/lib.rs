//! Exact computational kernel for standard-graded ideals over prime
//! fields: Groebner bases, Hilbert data, minimal graded free
//! resolutions, Betti tables, reduction numbers, and componentwise
//! linearity, together with the verification pipeline and selftest
//! used by the `gwb` command line tool.

pub mod error;
pub mod field;
pub mod gb;
pub mod hilbert;
pub mod ideal;
pub mod linalg;
pub mod modules;
pub mod monomial;
pub mod order;
pub mod poly;
pub mod quotient;
pub mod ring;
pub mod text;

pub use error::{Error, Result};
pub use field::{Fp, PrimeField, Wrng, DEFAULT_CHAR};
pub use ideal::{Ideal, MonomialIdeal};
pub use monomial::Monomial;
pub use order::MonomialOrder;
pub use poly::Polynomial;
pub use ring::PolyRing;
