//! Coefficient rings for Laurent polynomials.
//!
//! Everything downstream of [`crate::laurent::Laurent`] is generic over an
//! exact integral coefficient type. `BigInt` is the default used by the
//! crate-root aliases; machine integers are fine for small ranks where the
//! coefficients are known to stay bounded.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// An exact integer-like ring with Euclidean division.
pub trait Coefficient:
    Clone
    + Debug
    + Display
    + FromStr
    + Eq
    + Ord
    + Hash
    + Integer
    + Signed
    + FromPrimitive
    + ToPrimitive
    + Send
    + Sync
    + 'static
{
    /// Exact quotient if `self` is a multiple of `d`.
    fn checked_exact_div(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(d);
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }
}

impl Coefficient for i64 {}
impl Coefficient for i128 {}
impl Coefficient for BigInt {}
