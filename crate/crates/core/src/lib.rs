//! Canonical bases of higher-level Fock spaces for `U_q(sl_∞)`, monomial
//! vectors, charged symbols and the characters of `G(l, 1, n)` obtained by
//! specializing at `q = 1`.
//!
//! Coefficient arithmetic is generic over [`scalar::Coefficient`]; the
//! aliases below fix it to arbitrary precision integers.

pub mod characters;
pub mod combinat;
pub mod conjectures;
pub mod error;
pub mod fock;
pub mod laurent;
pub mod scalar;
pub mod symbols;

pub use combinat::{Charge, Multipartition, Partition};
pub use error::{Error, Result};
pub use characters::Character;
pub use fock::monomial::MonomialWord;
pub use fock::Generator;
pub use symbols::Symbol;

/// Library version, part of every cache key.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Laurent polynomials in `q` with `BigInt` coefficients.
pub type LaurentPoly = laurent::Laurent<num_bigint::BigInt>;
/// Fock space vectors with `BigInt` coefficients.
pub type FockVector = fock::Fock<num_bigint::BigInt>;
