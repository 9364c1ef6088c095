//! Sparse Laurent polynomials in one variable `q` with exact coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::Coefficient;

/// `Σ c_e q^e` stored as a sorted exponent → coefficient map with no zero entries.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Laurent<C> {
    terms: BTreeMap<i64, C>,
}

impl<C: Coefficient> Laurent<C> {
    pub fn zero() -> Self {
        Laurent {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(C::one(), 0)
    }

    /// `c · q^e`.
    pub fn monomial(c: C, e: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Laurent { terms }
    }

    /// `q^e`.
    pub fn q_pow(e: i64) -> Self {
        Self::monomial(C::one(), e)
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(c, 0)
    }

    /// Builds from `(exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms<I: IntoIterator<Item = (i64, C)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in it {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, e: i64, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                *v = v.clone() + c;
                if v.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn coeff(&self, e: i64) -> C {
        self.terms.get(&e).cloned().unwrap_or_else(C::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &C)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn scalar_mul(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Laurent {
            terms: self
                .terms
                .iter()
                .map(|(e, v)| (*e, v.clone() * c.clone()))
                .collect(),
        }
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        Laurent {
            terms: self.terms.iter().map(|(e, v)| (e + k, v.clone())).collect(),
        }
    }

    /// The bar involution `q ↦ q⁻¹`.
    pub fn bar(&self) -> Self {
        Laurent {
            terms: self.terms.iter().map(|(e, v)| (-e, v.clone())).collect(),
        }
    }

    pub fn is_bar_invariant(&self) -> bool {
        self.terms.iter().all(|(e, v)| self.terms.get(&-e) == Some(v))
    }

    /// Value at `q = 1`.
    pub fn eval_one(&self) -> C {
        self.terms.values().fold(C::zero(), |acc, c| acc + c.clone())
    }

    /// True if every exponent is strictly positive, i.e. the polynomial lies in `qℤ[q]`.
    pub fn in_q_zq(&self) -> bool {
        self.min_exponent().is_none_or(|e| e > 0)
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Quotient `c` with `c · d = self`, by long division from the top exponent.
    pub fn exact_divide(&self, d: &Self) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let (d_lo, d_hi) = (d.min_exponent().unwrap(), d.max_exponent().unwrap());
        let d_lead = d.terms[&d_hi].clone();
        let floor = self.min_exponent().unwrap() - d_lo;
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some(top) = rem.max_exponent() {
            let e = top - d_hi;
            let c = rem.terms[&top].checked_exact_div(&d_lead);
            let c = match c {
                Some(c) if e >= floor => c,
                _ => return Err(self.not_divisible(d)),
            };
            let term = Self::monomial(c, e);
            rem = &rem - &(&term * d);
            quot = &quot + &term;
        }
        Ok(quot)
    }

    fn not_divisible(&self, d: &Self) -> Error {
        Error::NotDivisible {
            numerator: self.to_string(),
            denominator: d.to_string(),
        }
    }

    /// The unique bar-symmetric `p` with `self − p ∈ qℤ[q]`.
    pub fn bar_symmetric_part(&self) -> Self {
        let mut p = Self::zero();
        for (e, c) in self.terms.iter() {
            if *e < 0 {
                p.add_term(*e, c.clone());
                p.add_term(-*e, c.clone());
            } else if *e == 0 {
                p.add_term(0, c.clone());
            }
        }
        p
    }

    /// Changes the coefficient ring.
    pub fn map_coefficients<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> Laurent<D> {
        Laurent::from_terms(self.terms.iter().map(|(e, c)| (*e, f(c))))
    }
}

/// The quantum integer `[n] = q^{n−1} + q^{n−3} + … + q^{1−n}`.
pub fn quantum_integer<C: Coefficient>(n: u32) -> Laurent<C> {
    let n = n as i64;
    Laurent::from_terms((0..n).map(|k| (n - 1 - 2 * k, C::one())))
}

/// `[n]! = [1][2]…[n]`, with `[0]! = 1`.
pub fn quantum_factorial<C: Coefficient>(n: u32) -> Laurent<C> {
    (1..=n).fold(Laurent::one(), |acc, k| &acc * &quantum_integer(k))
}

impl<C: Coefficient> Default for Laurent<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coefficient> Add for &Laurent<C> {
    type Output = Laurent<C>;
    fn add(self, rhs: &Laurent<C>) -> Laurent<C> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<C: Coefficient> Add for Laurent<C> {
    type Output = Laurent<C>;
    fn add(mut self, rhs: Laurent<C>) -> Laurent<C> {
        self += &rhs;
        self
    }
}

impl<C: Coefficient> AddAssign<&Laurent<C>> for Laurent<C> {
    fn add_assign(&mut self, rhs: &Laurent<C>) {
        for (e, c) in rhs.terms.iter() {
            self.add_term(*e, c.clone());
        }
    }
}

impl<C: Coefficient> SubAssign<&Laurent<C>> for Laurent<C> {
    fn sub_assign(&mut self, rhs: &Laurent<C>) {
        for (e, c) in rhs.terms.iter() {
            self.add_term(*e, -c.clone());
        }
    }
}

impl<C: Coefficient> Sub for &Laurent<C> {
    type Output = Laurent<C>;
    fn sub(self, rhs: &Laurent<C>) -> Laurent<C> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<C: Coefficient> Sub for Laurent<C> {
    type Output = Laurent<C>;
    fn sub(mut self, rhs: Laurent<C>) -> Laurent<C> {
        self -= &rhs;
        self
    }
}

impl<C: Coefficient> Neg for &Laurent<C> {
    type Output = Laurent<C>;
    fn neg(self) -> Laurent<C> {
        Laurent {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

impl<C: Coefficient> Neg for Laurent<C> {
    type Output = Laurent<C>;
    fn neg(self) -> Laurent<C> {
        -&self
    }
}

impl<C: Coefficient> Mul for &Laurent<C> {
    type Output = Laurent<C>;
    fn mul(self, rhs: &Laurent<C>) -> Laurent<C> {
        let mut out = Laurent::zero();
        for (e1, c1) in self.terms.iter() {
            for (e2, c2) in rhs.terms.iter() {
                out.add_term(e1 + e2, c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl<C: Coefficient> Mul for Laurent<C> {
    type Output = Laurent<C>;
    fn mul(self, rhs: Laurent<C>) -> Laurent<C> {
        &self * &rhs
    }
}

impl<C: Coefficient> Zero for Laurent<C> {
    fn zero() -> Self {
        Laurent::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<C: Coefficient> One for Laurent<C> {
    fn one() -> Self {
        Laurent::one()
    }
}

impl<C: Coefficient> fmt::Display for Laurent<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // highest power first
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let unit = abs.is_one();
            match (*e, unit) {
                (0, _) => write!(f, "{abs}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{abs}q")?,
                (e, true) => write!(f, "q^{e}")?,
                (e, false) => write!(f, "{abs}q^{e}")?,
            }
        }
        Ok(())
    }
}

impl<C: Coefficient> fmt::Debug for Laurent<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Laurent({self})")
    }
}

// Wire form: [[exponent, "coefficient"], ...] sorted by exponent.
impl<C: Coefficient> Serialize for Laurent<C> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let pairs: Vec<(i64, String)> = self
            .terms
            .iter()
            .map(|(e, c)| (*e, c.to_string()))
            .collect();
        pairs.serialize(s)
    }
}

impl<'de, C: Coefficient> Deserialize<'de> for Laurent<C> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let pairs: Vec<(i64, String)> = Vec::deserialize(d)?;
        let mut out = Laurent::zero();
        for (e, c) in pairs {
            let c: C = c
                .parse()
                .map_err(|_| D::Error::custom(format!("bad coefficient {c:?}")))?;
            out.add_term(e, c);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type P = Laurent<BigInt>;

    fn p(terms: &[(i64, i64)]) -> P {
        P::from_terms(terms.iter().map(|&(e, c)| (e, BigInt::from(c))))
    }

    #[test]
    fn cancellation() {
        assert_eq!(&p(&[(1, 1), (0, 1)]) + &p(&[(0, -1)]), p(&[(1, 1)]));
    }

    #[test]
    fn difference_of_squares() {
        let a = p(&[(1, 1), (-1, -1)]);
        let b = p(&[(1, 1), (-1, 1)]);
        assert_eq!(&a * &b, p(&[(2, 1), (-2, -1)]));
        assert!((&P::zero() * &a).is_zero());
    }

    #[test]
    fn bar_examples() {
        assert_eq!(p(&[(2, 1), (-1, 3)]).bar(), p(&[(-2, 1), (1, 3)]));
        assert_eq!(p(&[(0, 5)]).bar(), p(&[(0, 5)]));
    }

    #[test]
    fn factorials() {
        assert!(quantum_factorial::<BigInt>(0).is_one());
        assert!(quantum_factorial::<BigInt>(1).is_one());
        assert_eq!(quantum_factorial::<BigInt>(2), p(&[(1, 1), (-1, 1)]));
        // (q² + 1 + q⁻²)(q + q⁻¹) expanded by hand-free multiplication
        let oracle = &p(&[(2, 1), (0, 1), (-2, 1)]) * &p(&[(1, 1), (-1, 1)]);
        assert_eq!(oracle, p(&[(3, 1), (1, 2), (-1, 2), (-3, 1)]));
        assert_eq!(quantum_factorial::<BigInt>(3), oracle);
    }

    #[test]
    fn eval_at_one() {
        assert_eq!(p(&[(1, 1), (-1, 1)]).eval_one(), BigInt::from(2));
        assert_eq!(P::zero().eval_one(), BigInt::from(0));
        assert_eq!(p(&[(3, 1), (1, -1)]).eval_one(), BigInt::from(0));
    }

    #[test]
    fn division() {
        let d = p(&[(1, 1), (-1, 1)]);
        assert!(d.exact_divide(&d).unwrap().is_one());
        assert!(P::zero().exact_divide(&d).unwrap().is_zero());
        let num = p(&[(2, 1), (-2, -1)]);
        let den = p(&[(1, 1), (-1, -1)]);
        let quo = num.exact_divide(&den).unwrap();
        assert_eq!(quo, d);
        assert_eq!(&quo * &den, num);
        assert!(matches!(
            p(&[(2, 1), (0, 1)]).exact_divide(&p(&[(1, 2)])),
            Err(Error::NotDivisible { .. })
        ));
        assert!(matches!(
            p(&[(3, 1)]).exact_divide(&d),
            Err(Error::NotDivisible { .. })
        ));
        assert_eq!(d.exact_divide(&P::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn symmetric_part() {
        let c = p(&[(-2, 3), (0, 1), (1, 4), (2, -1)]);
        let sym = c.bar_symmetric_part();
        assert!(sym.is_bar_invariant());
        assert!((&c - &sym).in_q_zq());
    }

    #[test]
    fn wire_form() {
        let v = p(&[(-1, 2), (3, 1)]);
        let s = serde_json::to_string(&v).unwrap();
        assert_eq!(s, r#"[[-1,"2"],[3,"1"]]"#);
        let back: P = serde_json::from_str(&s).unwrap();
        assert_eq!(back, v);
        assert_eq!(v.to_string(), "q^3 + 2q^-1");
    }
}
