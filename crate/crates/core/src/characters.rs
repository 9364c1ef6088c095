//! Characters of `G(l, 1, n)` obtained at `q = 1`, Jucys–Murphy cellular
//! characters, type B constructible characters and the conversion between
//! Cherednik parameters and charges.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::combinat::{BoundaryKind, Charge, Multipartition};
use crate::error::{Error, Result};
use crate::fock::canonical::canonical_basis;
use crate::fock::{Fock, Generator};
use crate::scalar::Coefficient;

/// `Σ m_λ χ_λ` with positive multiplicities.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Character {
    rank: usize,
    level: usize,
    mults: BTreeMap<Multipartition, u64>,
}

impl Character {
    pub fn zero(rank: usize, level: usize) -> Self {
        Character {
            rank,
            level,
            mults: BTreeMap::new(),
        }
    }

    /// The trivial character of the trivial group.
    pub fn trivial(level: usize) -> Self {
        let mut c = Character::zero(0, level);
        c.mults.insert(Multipartition::empty(level), 1);
        c
    }

    pub fn irreducible(lam: Multipartition) -> Self {
        let mut c = Character::zero(lam.rank(), lam.level());
        c.mults.insert(lam, 1);
        c
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn is_zero(&self) -> bool {
        self.mults.is_empty()
    }

    pub fn multiplicity(&self, lam: &Multipartition) -> u64 {
        self.mults.get(lam).copied().unwrap_or(0)
    }

    pub fn constituents(&self) -> impl Iterator<Item = (&Multipartition, u64)> {
        self.mults.iter().map(|(l, &m)| (l, m))
    }

    /// Sum of multiplicities.
    pub fn degree_count(&self) -> u64 {
        self.mults.values().sum()
    }

    pub fn add(&mut self, lam: Multipartition, m: u64) {
        assert_eq!(lam.rank(), self.rank);
        if m > 0 {
            *self.mults.entry(lam).or_default() += m;
        }
    }

    /// `ξ`-truncated induction: keep the constituents obtained by adding a
    /// box of charged content `ξ`.
    pub fn truncated_induction(&self, xi: i64, s: &Charge) -> Character {
        let mut out = Character::zero(self.rank + 1, self.level);
        for (lam, &m) in &self.mults {
            for node in lam.addable_of_content(s, xi) {
                out.add(lam.with_node(&node), m);
            }
        }
        out
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .mults
            .iter()
            .map(|(l, &m)| if m == 1 { format!("χ{l}") } else { format!("{m}χ{l}") })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Character({self})")
    }
}

#[derive(Serialize, Deserialize)]
struct ConstituentWire {
    mp: Multipartition,
    mult: u64,
}

#[derive(Serialize, Deserialize)]
struct CharacterWire {
    rank: usize,
    level: usize,
    constituents: Vec<ConstituentWire>,
}

impl Serialize for Character {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CharacterWire {
            rank: self.rank,
            level: self.level,
            constituents: self
                .mults
                .iter()
                .map(|(l, &m)| ConstituentWire { mp: l.clone(), mult: m })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Character {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let w = CharacterWire::deserialize(d)?;
        let mut c = Character::zero(w.rank, w.level);
        for t in w.constituents {
            if t.mp.rank() != w.rank || t.mp.level() != w.level || t.mult == 0 {
                return Err(D::Error::custom(format!("bad constituent {}", t.mp)));
            }
            c.add(t.mp, t.mult);
        }
        Ok(c)
    }
}

/// `γ_v`: coefficients evaluated at `q = 1`.
pub fn evaluate_at_one<C: Coefficient>(v: &Fock<C>) -> Result<Character> {
    let mut out = Character::zero(v.rank(), v.level());
    for (lam, c) in v.eval_one() {
        if c.is_negative() {
            return Err(Error::NegativeMultiplicity(format!("{lam} has multiplicity {c}")));
        }
        let m = c
            .to_u64()
            .ok_or_else(|| Error::Invalid(format!("multiplicity {c} does not fit in 64 bits")))?;
        out.add(lam, m);
    }
    Ok(out)
}

fn addable_contents<'a>(lams: impl Iterator<Item = &'a Multipartition>, s: &Charge) -> BTreeSet<i64> {
    let mut out = BTreeSet::new();
    for lam in lams {
        for (_, k) in lam.boundary_boxes(s, BoundaryKind::Addable) {
            out.insert(k);
        }
    }
    out
}

/// All `γ_v` for quasimonomial `v` of rank `n`, by breadth-first search over
/// exact Fock vectors.
pub fn jm_cellular_characters(n: usize, s: &Charge) -> Result<BTreeSet<Character>> {
    let mut frontier: HashSet<Fock<BigInt>> = HashSet::new();
    frontier.insert(Fock::vacuum(s.clone()));
    for _ in 0..n {
        let mut next = HashSet::new();
        for v in &frontier {
            for i in addable_contents(v.support(), s) {
                let w = v.apply(Generator::F, i);
                if !w.is_zero() {
                    next.insert(w);
                }
            }
        }
        frontier = next;
    }
    frontier.iter().map(evaluate_at_one).collect()
}

/// `E_n` by iterated truncated induction on characters, starting from `E_0 = {1}`.
pub fn jm_cellular_characters_recursive(n: usize, s: &Charge) -> BTreeSet<Character> {
    let mut cur: BTreeSet<Character> = BTreeSet::from([Character::trivial(s.level())]);
    for _ in 0..n {
        let mut next = BTreeSet::new();
        for chi in &cur {
            for xi in addable_contents(chi.mults.keys(), s) {
                let ind = chi.truncated_induction(xi, s);
                if !ind.is_zero() {
                    next.insert(ind);
                }
            }
        }
        cur = next;
    }
    cur
}

/// `γ` of every canonical basis vector of rank `n`, for `l = 2`.
pub fn constructible_characters(n: usize, s: &Charge) -> Result<BTreeSet<Character>> {
    if s.level() != 2 {
        return Err(Error::ShapeMismatch("constructible characters need level 2".into()));
    }
    canonical_basis::<BigInt>(n, s)?
        .values()
        .map(evaluate_at_one)
        .collect()
}

type Q = BigRational;
type CQ = Complex<Q>;

/// Parameters `(c_0, …, c_{l−1})` and the shift `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CherednikParams {
    pub c: Vec<CQ>,
    pub k: Q,
}

impl CherednikParams {
    pub fn real(c: Vec<Q>, k: Q) -> Self {
        CherednikParams {
            c: c.into_iter().map(|x| Complex::new(x, Q::zero())).collect(),
            k,
        }
    }

    pub fn level(&self) -> usize {
        self.c.len()
    }
}

/// Result of [`params_to_charge`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedCharge {
    pub charge: Charge,
    /// Set when the roots of unity were evaluated in floating point.
    pub approximate: bool,
}

fn exact_root(l: usize) -> Option<CQ> {
    let (z, o) = (Q::zero(), Q::one());
    match l {
        1 => Some(Complex::new(o, z)),
        2 => Some(Complex::new(-o, z)),
        4 => Some(Complex::new(z, o)),
        _ => None,
    }
}

fn cpow(z: &CQ, e: i64, l: usize) -> CQ {
    let e = e.rem_euclid(l as i64);
    let mut out = Complex::new(Q::one(), Q::zero());
    for _ in 0..e {
        out = &out * z;
    }
    out
}

fn as_integer(x: &Q) -> Option<i64> {
    if x.is_integer() {
        x.to_integer().to_i64()
    } else {
        None
    }
}

/// `k_i = (1/l) Σ_{j≥1} ζ^{j(1−i)} c_j` and `k′_c = l·k_{1−c} − k`.
pub fn params_to_charge(p: &CherednikParams) -> Result<DerivedCharge> {
    let l = p.level();
    if l == 0 {
        return Err(Error::Invalid("no parameters".into()));
    }
    let c0 = Complex::new(-Q::new(BigInt::one(), BigInt::from(l)), Q::zero());
    if p.c[0] != c0 {
        return Err(Error::HypothesisViolated(format!("c_0 must be -1/{l}")));
    }
    let li = BigInt::from(l as i64);
    match exact_root(l) {
        Some(z) => {
            let k_of = |i: i64| -> CQ {
                let mut acc = Complex::new(Q::zero(), Q::zero());
                for (j, cj) in p.c.iter().enumerate().skip(1) {
                    acc += cpow(&z, j as i64 * (1 - i), l) * cj;
                }
                acc / Complex::new(Q::from_integer(li.clone()), Q::zero())
            };
            let mut out = Vec::with_capacity(l);
            for c in 1..=l as i64 {
                let ki = k_of(1 - c);
                if !ki.im.is_zero() {
                    return Err(Error::HypothesisViolated(format!("k_{} is not real", 1 - c)));
                }
                let v = ki.re * Q::from_integer(li.clone()) - &p.k;
                out.push(as_integer(&v).ok_or_else(|| {
                    Error::HypothesisViolated(format!("l·k_{} − k = {v} is not an integer", 1 - c))
                })?);
            }
            Ok(DerivedCharge {
                charge: Charge::new(out),
                approximate: false,
            })
        }
        None => {
            let tol = 1e-9;
            let cf: Vec<Complex<f64>> = p
                .c
                .iter()
                .map(|x| Complex::new(x.re.to_f64().unwrap_or(f64::NAN), x.im.to_f64().unwrap_or(f64::NAN)))
                .collect();
            let kf = p.k.to_f64().unwrap_or(f64::NAN);
            let mut out = Vec::with_capacity(l);
            for c in 1..=l as i64 {
                let i = 1 - c;
                let mut acc = Complex::new(0.0, 0.0);
                for (j, cj) in cf.iter().enumerate().skip(1) {
                    let e = (j as i64 * (1 - i)).rem_euclid(l as i64) as f64;
                    let ang = 2.0 * std::f64::consts::PI * e / l as f64;
                    acc += Complex::from_polar(1.0, ang) * cj;
                }
                let ki = acc / l as f64;
                if ki.im.abs() > tol {
                    return Err(Error::HypothesisViolated(format!("k_{i} is not real")));
                }
                let v = ki.re * l as f64 - kf;
                if (v - v.round()).abs() > tol {
                    return Err(Error::HypothesisViolated(format!("l·k_{i} − k = {v} is not an integer")));
                }
                out.push(v.round() as i64);
            }
            Ok(DerivedCharge {
                charge: Charge::new(out),
                approximate: true,
            })
        }
    }
}

/// A preimage of `s` under [`params_to_charge`], exact for `l ∈ {1, 2, 4}`.
pub fn charge_to_params(s: &Charge) -> Result<CherednikParams> {
    let l = s.level();
    let z = exact_root(l)
        .ok_or_else(|| Error::Invalid(format!("exact parameters are only available for l in {{1, 2, 4}}, not {l}")))?;
    let lq = Q::from_integer(BigInt::from(l as i64));
    let sum: i64 = s.values().iter().sum();
    let k = -Q::from_integer(BigInt::from(sum)) / &lq;
    // k_i = (k′_{1−i} + k) / l, indices mod l in 1..=l
    let k_of = |i: i64| -> Q {
        let c = (1 - i - 1).rem_euclid(l as i64) as usize + 1;
        (Q::from_integer(BigInt::from(s.get(c))) + &k) / &lq
    };
    let mut c = vec![Complex::new(-Q::one() / &lq, Q::zero())];
    for j in 1..l as i64 {
        let mut acc = Complex::new(Q::zero(), Q::zero());
        for i in 0..l as i64 {
            acc += cpow(&z, -j * (1 - i), l) * Complex::new(k_of(i), Q::zero());
        }
        c.push(acc);
    }
    Ok(CherednikParams { c, k })
}
