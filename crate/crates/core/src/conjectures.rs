//! Checkers for computational claims about the canonical basis. Each check
//! produces one [`Report`] per label.

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::combinat::{Charge, Multipartition};
use crate::error::Result;
use crate::fock::canonical::{canonical_basis, canonical_vector};
use crate::fock::monomial::{is_monomial_vector, MonomialSearch};
use crate::fock::Fock;
use crate::symbols::{minimal_symbol, symbol_of, Symbol};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub check: &'static str,
    pub charge: Charge,
    pub lambda: Multipartition,
    pub pass: bool,
    pub detail: Value,
}

impl Report {
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }
}

/// Finite symbol of `μ` with row lengths `s_c + m`, `m` the smallest value
/// at least `n` keeping every length nonnegative.
pub fn finite_symbol(mu: &Multipartition, s: &Charge) -> Result<Symbol> {
    let n = mu.rank() as i64;
    let lowest = s.values().iter().copied().min().unwrap_or(0);
    let m = n.max(-lowest).max(1);
    // semi-infinite truncation m is finite length s_c + m
    Ok(symbol_of(mu, s, m)?.to_finite())
}

fn b_of(mu: &Multipartition, s: &Charge) -> Result<i64> {
    Ok(finite_symbol(mu, s)?.b_invariants()?.0)
}

/// Constituents of `G` with the smallest b-invariant.
pub fn min_b_constituents(g: &Fock<BigInt>) -> Result<(i64, Vec<Multipartition>)> {
    let s = g.charge();
    let mut best = i64::MAX;
    let mut who = Vec::new();
    for mu in g.support() {
        let b = b_of(mu, s)?;
        if b < best {
            best = b;
            who.clear();
        }
        if b == best {
            who.push(mu.clone());
        }
    }
    Ok((best, who))
}

/// Unique minimal-b constituent in every `G(λ, s)` of rank `n`.
pub fn check_min_b(n: usize, s: &Charge) -> Result<Vec<Report>> {
    let basis = canonical_basis::<BigInt>(n, s)?;
    basis
        .par_iter()
        .map(|(lam, g)| {
            let (b, who) = min_b_constituents(g)?;
            Ok(Report {
                check: "min_b_constituent",
                charge: s.clone(),
                lambda: lam.clone(),
                pass: who.len() == 1,
                detail: json!({"b": b, "minimizers": who, "support": g.len()}),
            })
        })
        .collect()
}

/// `m(λ)` has the minimal symbol of the family of `λ`.
pub fn check_m_lambda(n: usize, s: &Charge) -> Result<Vec<Report>> {
    let basis = canonical_basis::<BigInt>(n, s)?;
    basis
        .par_iter()
        .map(|(lam, g)| {
            let (_, who) = min_b_constituents(g)?;
            let sym = finite_symbol(lam, s)?;
            let sf = minimal_symbol(&sym.family_key()?)?;
            let pass = who.len() == 1 && finite_symbol(&who[0], s)? == sf;
            Ok(Report {
                check: "m_lambda_family",
                charge: s.clone(),
                lambda: lam.clone(),
                pass,
                detail: json!({"m_lambda": who, "family_minimal_symbol": sf}),
            })
        })
        .collect()
}

fn search_detail(r: &MonomialSearch) -> Value {
    match r {
        MonomialSearch::Yes(w) => json!({"result": "monomial", "word": w}),
        MonomialSearch::No => json!({"result": "not monomial"}),
        MonomialSearch::BudgetExceeded => json!({"result": "budget exceeded"}),
    }
}

/// `G(λ, s)` is not monomial.
pub fn check_not_monomial(lam: &Multipartition, s: &Charge, budget: u64) -> Result<Report> {
    let g = canonical_vector::<BigInt>(lam, s)?;
    let r = is_monomial_vector(&g, budget, false);
    Ok(Report {
        check: "l5_counterexample",
        charge: s.clone(),
        lambda: lam.clone(),
        pass: r == MonomialSearch::No,
        detail: json!({"support": g.len(), "search": search_detail(&r)}),
    })
}

/// Every `G` of rank `n` is a quasimonomial vector (level two, `s_1 > s_2`).
pub fn check_quasimonomial(n: usize, s: &Charge, budget: u64) -> Result<Vec<Report>> {
    let basis = canonical_basis::<BigInt>(n, s)?;
    Ok(basis
        .par_iter()
        .map(|(lam, g)| {
            let r = is_monomial_vector(g, budget, true);
            Report {
                check: "canonical_monomial_l2",
                charge: s.clone(),
                lambda: lam.clone(),
                pass: matches!(r, MonomialSearch::Yes(_)),
                detail: search_detail(&r),
            }
        })
        .collect())
}

/// The label used for the level-five counterexample: the tuple
/// `((3),(3),(1),∅,∅)` with its components listed in reverse order.
pub fn l5_counterexample() -> (Multipartition, Charge) {
    (
        Multipartition::from_parts(&[&[], &[], &[1], &[3], &[3]]),
        Charge::new(vec![3, 2, 2, 1, 0]),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn min_b_small() {
        for r in check_min_b(3, &Charge::new(vec![1, 0])).unwrap() {
            assert!(r.pass, "{}", r.to_json_line());
        }
    }

    #[test]
    fn finite_symbol_lengths() {
        let s = Charge::new(vec![1, 0]);
        let sym = finite_symbol(&Multipartition::from_parts(&[&[1], &[1]]), &s).unwrap();
        assert_eq!(sym.lengths(), vec![3, 2]);
    }
}
