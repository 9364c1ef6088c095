//! Monomial words, monomial vectors and the divided-power schedule giving
//! the monomial basis element `A(λ)`.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use super::canonical::strictly_above;
use super::Fock;
use crate::combinat::{is_cylindrical, Charge, Multipartition};
use crate::error::{Error, Result};
use crate::scalar::Coefficient;
use crate::symbols::{min_truncation, symbol_of};

/// Letters `(i, r)` standing for `F_i^{(r)}`, applied first to last.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MonomialWord(pub Vec<(i64, u32)>);

impl MonomialWord {
    pub fn new(letters: Vec<(i64, u32)>) -> Result<Self> {
        if letters.iter().any(|&(_, r)| r == 0) {
            return Err(Error::Invalid("divided powers must be positive".into()));
        }
        Ok(MonomialWord(letters))
    }

    pub fn letters(&self) -> &[(i64, u32)] {
        &self.0
    }

    pub fn is_quasimonomial(&self) -> bool {
        self.0.iter().all(|&(_, r)| r == 1)
    }

    pub fn rank(&self) -> usize {
        self.0.iter().map(|&(_, r)| r as usize).sum()
    }
}

impl fmt::Display for MonomialWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        // printed as an operator product, last letter leftmost
        let parts: Vec<String> = self
            .0
            .iter()
            .rev()
            .map(|&(i, r)| if r == 1 { format!("F_{i}") } else { format!("F_{i}^({r})") })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// `F_{i_k}^{(r_k)} ⋯ F_{i_1}^{(r_1)} |∅, s⟩`.
pub fn monomial_vector<C: Coefficient>(w: &MonomialWord, s: &Charge) -> Result<Fock<C>> {
    apply_word(w, Fock::vacuum(s.clone()))
}

pub fn apply_word<C: Coefficient>(w: &MonomialWord, mut v: Fock<C>) -> Result<Fock<C>> {
    for &(i, r) in &w.0 {
        v = v.apply_divided_f(i, r)?;
    }
    Ok(v)
}

/// Word whose monomial vector is `|λ, s⟩` plus terms strictly above `λ`.
///
/// Columns of the symbol are built from the rightmost to the leftmost; in a
/// column every bead starts at its frozen value and the beads still short of
/// their target are pushed up one step at a time by a common divided power.
pub fn schedule_for(lambda: &Multipartition, s: &Charge, m: i64) -> Result<MonomialWord> {
    if !is_cylindrical(lambda, s)? {
        return Err(Error::NotCylindrical(format!("{lambda} at charge {:?}", s.values())));
    }
    let word = raw_schedule(lambda, s, m)?;
    let v = monomial_vector::<num_bigint::BigInt>(&word, s)?;
    check_unitriangular(&v, lambda).map_err(Error::ScheduleFailure)?;
    Ok(word)
}

pub(crate) fn raw_schedule(lambda: &Multipartition, s: &Charge, m: i64) -> Result<MonomialWord> {
    let sym = symbol_of(lambda, s, m.max(min_truncation(lambda, s)))?;
    let base = sym.base();
    let width = sym.lengths().into_iter().max().unwrap_or(0);
    let mut letters = Vec::new();
    for k in (0..width).rev() {
        let start = base + k as i64;
        let targets: Vec<i64> = sym
            .rows()
            .iter()
            .filter(|r| r.len() > k)
            .map(|r| r[k])
            .collect();
        let top = targets.iter().copied().max().unwrap_or(start);
        for i in start..top {
            let r = targets.iter().filter(|&&t| t > i).count() as u32;
            letters.push((i, r));
        }
    }
    MonomialWord::new(letters)
}

/// `Ok` if `v` has coefficient one on `λ` and the rest of its support lies
/// strictly above `λ`; otherwise a description of the first offence.
pub(crate) fn check_unitriangular<C: Coefficient>(
    v: &Fock<C>,
    lambda: &Multipartition,
) -> std::result::Result<(), String> {
    let c = v.coeff(lambda);
    if !c.is_one() {
        return Err(format!("coefficient of {lambda} is {c}, expected 1"));
    }
    for mu in v.support() {
        if mu != lambda && !strictly_above(mu, lambda, v.charge()) {
            return Err(format!("{mu} occurs in the expansion but is not above {lambda}"));
        }
    }
    Ok(())
}

/// Result of [`is_monomial_vector`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MonomialSearch {
    Yes(MonomialWord),
    No,
    BudgetExceeded,
}

/// Searches for a word `w` with `monomial_vector(w) = v`. Letter contents are
/// drawn from the box contents common to the support of `v`. Monomial words
/// have distinct consecutive contents; `quasi` instead restricts to powers
/// one with repeats allowed. `budget` caps the number of partial words
/// examined.
pub fn is_monomial_vector<C: Coefficient>(v: &Fock<C>, budget: u64, quasi: bool) -> MonomialSearch {
    let s = v.charge().clone();
    let Some(first) = v.support().next() else {
        return MonomialSearch::No;
    };
    let mut target: BTreeMap<i64, u32> = BTreeMap::new();
    for k in first.content_multiset(&s) {
        *target.entry(k).or_default() += 1;
    }
    for mu in v.support() {
        let mut t: BTreeMap<i64, u32> = BTreeMap::new();
        for k in mu.content_multiset(&s) {
            *t.entry(k).or_default() += 1;
        }
        if t != target {
            return MonomialSearch::No;
        }
    }
    if !v.has_nonnegative_coefficients() {
        return MonomialSearch::No;
    }
    let support: Vec<Multipartition> = v.support().cloned().collect();
    let mut st = MonoSearch {
        goal: v,
        support,
        remaining: target,
        word: Vec::new(),
        budget,
        used: 0,
        dead: HashSet::new(),
        quasi,
    };
    match st.go(Fock::vacuum(s)) {
        Some(true) => MonomialSearch::Yes(MonomialWord(st.word)),
        Some(false) => MonomialSearch::No,
        None => MonomialSearch::BudgetExceeded,
    }
}

struct MonoSearch<'a, C: Coefficient> {
    goal: &'a Fock<C>,
    support: Vec<Multipartition>,
    remaining: BTreeMap<i64, u32>,
    word: Vec<(i64, u32)>,
    budget: u64,
    used: u64,
    dead: HashSet<(Fock<C>, Option<i64>)>,
    quasi: bool,
}

impl<C: Coefficient> MonoSearch<'_, C> {
    /// `Some(true)` found, `Some(false)` exhausted, `None` out of budget.
    fn go(&mut self, cur: Fock<C>) -> Option<bool> {
        if self.remaining.values().all(|&n| n == 0) {
            return Some(&cur == self.goal);
        }
        let prev = if self.quasi { None } else { self.word.last().map(|&(i, _)| i) };
        let state = (cur, prev);
        if self.dead.contains(&state) {
            return Some(false);
        }
        let cur = &state.0;
        self.used += 1;
        if self.used > self.budget {
            return None;
        }
        let choices: Vec<(i64, u32)> = self
            .remaining
            .iter()
            .filter(|&(&i, &n)| n > 0 && Some(i) != prev)
            .map(|(&i, &n)| (i, n))
            .collect();
        for (i, n) in choices {
            let max_r = if self.quasi { 1 } else { n.min(cur.level() as u32) };
            for r in 1..=max_r {
                let next = match cur.apply_divided_f(i, r) {
                    Ok(x) => x,
                    Err(_) => continue,
                };
                if next.is_zero() || !self.fits(&next) {
                    continue;
                }
                *self.remaining.get_mut(&i).unwrap() -= r;
                self.word.push((i, r));
                let res = self.go(next);
                match res {
                    Some(true) => return Some(true),
                    None => return None,
                    Some(false) => {}
                }
                self.word.pop();
                *self.remaining.get_mut(&i).unwrap() += r;
            }
        }
        self.dead.insert(state);
        Some(false)
    }

    /// Each index of the goal must grow out of some current index, since
    /// coefficients of divided-power products are nonnegative and terms only
    /// disappear, never cancel.
    fn fits(&self, v: &Fock<C>) -> bool {
        self.support
            .iter()
            .all(|t| v.support().any(|mu| mu.is_contained_in(t)))
    }
}
