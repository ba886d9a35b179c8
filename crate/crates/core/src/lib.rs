//! Exact algorithms for monomial ideals in `k[x_1, ..., x_d]`.
//!
//! The crate is `no_std` (it only needs `alloc`). It covers:
//!
//! * canonical monomial ideals and their lattice operations ([`MonomialIdeal`]),
//! * minimal irreducible and primary decompositions, linear growth
//!   certificates for ordinary and Frobenius powers, and tight closure in
//!   monomial quotient rings ([`decomposition`]),
//! * multigraded Betti numbers, Castelnuovo-Mumford regularity and a
//!   computable linear bound for the regularity of powers ([`regularity`]),
//! * a small Buchberger engine over prime fields with univariate
//!   factorization ([`groebner`]),
//! * a verifier for the primary decomposition of Katzman's family
//!   `(x^q, y^q, xy(x-y)(x-ty))` ([`katzman`]).
//!
//! Everything is a pure function of immutable values.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod decomposition;
mod error;
pub mod groebner;
mod ideal;
pub mod katzman;
mod limits;
mod monomial;
pub mod regularity;
mod ring;

pub use error::{Error, Result};
pub use ideal::{max_exponent, minimalize, MonomialIdeal};
pub use limits::Limits;
pub use monomial::Monomial;
pub use ring::Ring;
