pub mod coeff;
pub mod constructions;
pub mod error;
pub mod geometry;
pub mod hermitian;
pub mod io;
pub mod leviflat;
pub mod linalg;
pub mod poly;

pub use coeff::Coefficient;
pub use error::{Error, ParseError, ParseErrorKind, Result};
pub use poly::{ComplexifiedPoly, HoloPoly, MixedPoly, Substitution, Wirtinger};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/intro.md")]
    mod intro {}
    #[doc = include_str!("../../../book/src/polynomials.md")]
    mod polynomials {}
    #[doc = include_str!("../../../book/src/hermitian.md")]
    mod hermitian {}
    #[doc = include_str!("../../../book/src/geometry.md")]
    mod geometry {}
    #[doc = include_str!("../../../book/src/certificates.md")]
    mod certificates {}
    #[doc = include_str!("../../../book/src/constructions.md")]
    mod constructions {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
    #[doc = include_str!("../../../book/src/scope.md")]
    mod scope {}
}
