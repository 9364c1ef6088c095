//! The level-`l` Fock space with Laurent coefficients.

pub mod canonical;
pub mod monomial;
pub mod tensor;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::combinat::{n_counts, weight_statistic, Charge, Multipartition};
use crate::error::{Error, Result};
use crate::laurent::{quantum_factorial, Laurent};
use crate::scalar::Coefficient;

/// Chevalley generators and the inverse Cartan element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Generator {
    E,
    F,
    K,
    KInv,
}

impl std::str::FromStr for Generator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "E" | "e" => Ok(Generator::E),
            "F" | "f" => Ok(Generator::F),
            "K" | "k" => Ok(Generator::K),
            "Kinv" | "KInv" | "kinv" => Ok(Generator::KInv),
            _ => Err(Error::Invalid(format!("unknown generator {s:?}"))),
        }
    }
}

/// A sparse vector `Σ c_λ(q) |λ, s⟩` in a fixed rank. The rank tag of the
/// zero vector is ignored by equality.
#[derive(Clone)]
pub struct Fock<C> {
    charge: Charge,
    rank: usize,
    terms: BTreeMap<Multipartition, Laurent<C>>,
}

impl<C: Coefficient> PartialEq for Fock<C> {
    fn eq(&self, o: &Self) -> bool {
        self.charge == o.charge
            && self.terms == o.terms
            && (self.rank == o.rank || self.terms.is_empty())
    }
}

impl<C: Coefficient> Eq for Fock<C> {}

impl<C: Coefficient> std::hash::Hash for Fock<C> {
    fn hash<H: std::hash::Hasher>(&self, h: &mut H) {
        self.charge.hash(h);
        self.terms.hash(h);
    }
}

impl<C: Coefficient> Fock<C> {
    pub fn zero(charge: Charge, rank: usize) -> Self {
        Fock {
            charge,
            rank,
            terms: BTreeMap::new(),
        }
    }

    /// `|λ, s⟩`.
    pub fn basis(lambda: Multipartition, charge: Charge) -> Self {
        assert_eq!(lambda.level(), charge.level(), "level mismatch");
        let rank = lambda.rank();
        let mut terms = BTreeMap::new();
        terms.insert(lambda, Laurent::one());
        Fock { charge, rank, terms }
    }

    /// `|∅, s⟩`.
    pub fn vacuum(charge: Charge) -> Self {
        Fock::basis(Multipartition::empty(charge.level()), charge)
    }

    pub fn charge(&self) -> &Charge {
        &self.charge
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn level(&self) -> usize {
        self.charge.level()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Multipartition, &Laurent<C>)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Multipartition> {
        self.terms.keys()
    }

    pub fn coeff(&self, lambda: &Multipartition) -> Laurent<C> {
        self.terms.get(lambda).cloned().unwrap_or_else(Laurent::zero)
    }

    pub fn add_term(&mut self, lambda: Multipartition, c: Laurent<C>) {
        assert_eq!(lambda.level(), self.level(), "level mismatch");
        assert_eq!(lambda.rank(), self.rank, "rank mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scalar_mul(&self, c: &Laurent<C>) -> Self {
        let mut out = Fock::zero(self.charge.clone(), self.rank);
        if !c.is_zero() {
            for (l, x) in &self.terms {
                out.add_term(l.clone(), x * c);
            }
        }
        out
    }

    /// Coefficients with `q ↦ q⁻¹`.
    pub fn bar_coefficients(&self) -> Self {
        Fock {
            charge: self.charge.clone(),
            rank: self.rank,
            terms: self.terms.iter().map(|(l, c)| (l.clone(), c.bar())).collect(),
        }
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(Laurent::has_nonnegative_coefficients)
    }

    pub fn map_coefficients<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> Fock<D> {
        let mut out = Fock::zero(self.charge.clone(), self.rank);
        for (l, c) in &self.terms {
            out.add_term(l.clone(), c.map_coefficients(&f));
        }
        out
    }

    fn check_compatible(&self, other: &Self) {
        assert_eq!(self.charge, other.charge, "charge mismatch");
        assert!(
            self.rank == other.rank || self.is_zero() || other.is_zero(),
            "rank mismatch"
        );
    }

    /// Applies a Chevalley generator by the box-adding and box-removing rules.
    pub fn apply(&self, g: Generator, i: i64) -> Self {
        let s = &self.charge;
        let rank = match g {
            Generator::F => self.rank + 1,
            Generator::E => self.rank.saturating_sub(1),
            _ => self.rank,
        };
        let mut out = Fock::zero(s.clone(), rank);
        if g == Generator::E && self.rank == 0 {
            return out;
        }
        for (lam, c) in &self.terms {
            match g {
                Generator::F => {
                    for node in lam.addable_of_content(s, i) {
                        let (succ, _) = n_counts(lam, node.comp, i, s);
                        out.add_term(lam.with_node(&node), c.shift(succ));
                    }
                }
                Generator::E => {
                    for node in lam.removable_of_content(s, i) {
                        let mu = lam.without_node(&node);
                        let (_, prec) = n_counts(&mu, node.comp, i, s);
                        out.add_term(mu, c.shift(-prec));
                    }
                }
                Generator::K | Generator::KInv => {
                    let w = weight_statistic(lam, i, s);
                    let e = if g == Generator::K { w } else { -w };
                    out.add_term(lam.clone(), c.shift(e));
                }
            }
        }
        out
    }

    /// `F_i^{(r)} = F_i^r / [r]!`.
    pub fn apply_divided_f(&self, i: i64, r: u32) -> Result<Self> {
        let mut v = self.clone();
        for _ in 0..r {
            v = v.apply(Generator::F, i);
        }
        if r <= 1 {
            return Ok(v);
        }
        let d = quantum_factorial::<C>(r);
        let mut out = Fock::zero(v.charge.clone(), v.rank);
        for (l, c) in v.terms {
            out.add_term(l, c.exact_divide(&d)?);
        }
        Ok(out)
    }

    /// Sum of coefficients at `q = 1` over all terms, as a map.
    pub fn eval_one(&self) -> BTreeMap<Multipartition, C> {
        self.terms
            .iter()
            .map(|(l, c)| (l.clone(), c.eval_one()))
            .filter(|(_, c)| !c.is_zero())
            .collect()
    }
}

fn combine<C: Coefficient>(a: &Fock<C>, b: &Fock<C>, sign: bool) -> Fock<C> {
    a.check_compatible(b);
    let rank = if a.is_zero() { b.rank } else { a.rank };
    let mut out = Fock {
        charge: a.charge.clone(),
        rank,
        terms: a.terms.clone(),
    };
    for (l, c) in &b.terms {
        out.add_term(l.clone(), if sign { c.clone() } else { -c });
    }
    out
}

impl<C: Coefficient> Add for &Fock<C> {
    type Output = Fock<C>;
    fn add(self, o: &Fock<C>) -> Fock<C> {
        combine(self, o, true)
    }
}

impl<C: Coefficient> Sub for &Fock<C> {
    type Output = Fock<C>;
    fn sub(self, o: &Fock<C>) -> Fock<C> {
        combine(self, o, false)
    }
}

impl<C: Coefficient> Add for Fock<C> {
    type Output = Fock<C>;
    fn add(self, o: Fock<C>) -> Fock<C> {
        combine(&self, &o, true)
    }
}

impl<C: Coefficient> Sub for Fock<C> {
    type Output = Fock<C>;
    fn sub(self, o: Fock<C>) -> Fock<C> {
        combine(&self, &o, false)
    }
}

impl<C: Coefficient> Neg for &Fock<C> {
    type Output = Fock<C>;
    fn neg(self) -> Fock<C> {
        self.scalar_mul(&-Laurent::<C>::one())
    }
}

impl<C: Coefficient> fmt::Display for Fock<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(l, c)| {
                if c.is_one() {
                    format!("|{l}⟩")
                } else if c.len() == 1 {
                    format!("{c}|{l}⟩")
                } else {
                    format!("({c})|{l}⟩")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<C: Coefficient> fmt::Debug for Fock<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Fock[{:?}, n={}]({self})", self.charge.values(), self.rank)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(bound = "")]
struct TermWire<C: Coefficient> {
    mp: Multipartition,
    coeff: Laurent<C>,
}

#[derive(Serialize, Deserialize)]
#[serde(bound = "")]
struct FockWire<C: Coefficient> {
    charge: Charge,
    rank: usize,
    terms: Vec<TermWire<C>>,
}

impl<C: Coefficient> Serialize for Fock<C> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        FockWire {
            charge: self.charge.clone(),
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|(l, c)| TermWire {
                    mp: l.clone(),
                    coeff: c.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de, C: Coefficient> Deserialize<'de> for Fock<C> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let w = FockWire::<C>::deserialize(d)?;
        let mut v = Fock::zero(w.charge, w.rank);
        for t in w.terms {
            if t.mp.level() != v.level() || t.mp.rank() != v.rank {
                return Err(D::Error::custom(format!("term {} does not fit charge/rank", t.mp)));
            }
            v.add_term(t.mp, t.coeff);
        }
        Ok(v)
    }
}

/// Helper for tests and callers building vectors from `(λ, c)` pairs.
pub fn fock_from_terms<C: Coefficient>(
    charge: Charge,
    rank: usize,
    terms: impl IntoIterator<Item = (Multipartition, Laurent<C>)>,
) -> Fock<C> {
    let mut v = Fock::zero(charge, rank);
    for (l, c) in terms {
        v.add_term(l, c);
    }
    v
}
