//! The canonical basis `G(λ, s)` by triangular elimination over the
//! bar-invariant vectors `A(λ)`.
//!
//! The elimination uses the partial order `μ ⪰ λ` iff for every `k` the
//! content multiset of the first `k` components of `μ` contains that of `λ`.
//! Weight spaces (fixed content multiset) are independent and are handled in
//! parallel.

use std::collections::BTreeMap;

use rayon::prelude::*;

use super::monomial::{check_unitriangular, monomial_vector, raw_schedule};
use super::Fock;
use crate::combinat::{is_cylindrical, multipartitions, Charge, Multipartition};
use crate::error::{Error, Result};
use crate::scalar::Coefficient;
use crate::symbols::min_truncation;

/// Bumped whenever the elimination order changes; cached bases keyed on an
/// older value are stale.
pub const ELIMINATION_POLICY: u32 = 2;

fn prefix_contents(lam: &Multipartition, s: &Charge) -> Vec<BTreeMap<i64, u32>> {
    let mut acc = BTreeMap::new();
    let mut out = Vec::with_capacity(lam.level());
    for (ci, p) in lam.components().iter().enumerate() {
        let sc = s.get(ci + 1);
        for (a, &len) in p.parts().iter().enumerate() {
            for b in 0..len as i64 {
                *acc.entry(sc + b - a as i64).or_insert(0) += 1;
            }
        }
        out.push(acc.clone());
    }
    out
}

fn contains(big: &BTreeMap<i64, u32>, small: &BTreeMap<i64, u32>) -> bool {
    small
        .iter()
        .all(|(k, &n)| big.get(k).copied().unwrap_or(0) >= n)
}

/// `μ ≻ λ` in the elimination order.
pub fn strictly_above(mu: &Multipartition, lam: &Multipartition, s: &Charge) -> bool {
    if mu == lam || mu.rank() != lam.rank() {
        return false;
    }
    prefix_contents(mu, s)
        .iter()
        .zip(prefix_contents(lam, s).iter())
        .all(|(a, b)| contains(a, b))
}

/// Sum of the sizes of the first `k` components over all `k`; strictly
/// increasing along `≺`.
fn height(lam: &Multipartition) -> usize {
    let mut acc = 0;
    let mut h = 0;
    for p in lam.components() {
        acc += p.rank();
        h += acc;
    }
    h
}

/// Tie-break inside a level of [`height`]. Any choice is a valid linear
/// extension; the output does not depend on it.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum TieBreak {
    #[default]
    Lex,
    ReverseLex,
}

fn cmp_processing(a: &Multipartition, b: &Multipartition, tb: TieBreak) -> std::cmp::Ordering {
    let (ha, hb) = (height(a), height(b));
    hb.cmp(&ha).then_with(|| match tb {
        TieBreak::Lex => a.cmp(b),
        TieBreak::ReverseLex => b.cmp(a),
    })
}

/// Cylindrical multipartitions of rank `n`, the labels of the basis.
pub fn labels(n: usize, s: &Charge) -> Result<Vec<Multipartition>> {
    s.require_decreasing()?;
    let mut out = Vec::new();
    for lam in multipartitions(n, s.level()) {
        if is_cylindrical(&lam, s)? {
            out.push(lam);
        }
    }
    Ok(out)
}

/// `A(λ)`: the monomial vector of the column schedule.
pub fn monomial_basis_vector<C: Coefficient>(lam: &Multipartition, s: &Charge) -> Result<Fock<C>> {
    let w = raw_schedule(lam, s, min_truncation(lam, s))?;
    monomial_vector(&w, s)
}

/// Elimination inside one weight space. `labels` must be the complete list
/// of labels with this content multiset.
fn weight_space<C: Coefficient>(
    labels: &[Multipartition],
    s: &Charge,
    tb: TieBreak,
) -> Result<BTreeMap<Multipartition, Fock<C>>> {
    let mut order = labels.to_vec();
    order.sort_by(|a, b| cmp_processing(a, b, tb));
    let mut done: BTreeMap<Multipartition, Fock<C>> = BTreeMap::new();
    for lam in &order {
        let mut g: Fock<C> = monomial_basis_vector(lam, s)?;
        check_unitriangular(&g, lam).map_err(|e| {
            Error::TriangularityFailure(format!("A({lam}) at charge {:?}: {e}", s.values()))
        })?;
        loop {
            // lowest offending index first: later subtractions only touch
            // indices above it
            let bad = g
                .terms()
                .filter(|(mu, c)| *mu != lam && !c.in_q_zq())
                .map(|(mu, _)| mu.clone())
                .min_by(|a, b| cmp_processing(b, a, tb));
            let Some(mu) = bad else { break };
            let Some(gmu) = done.get(&mu) else {
                return Err(Error::TriangularityFailure(format!(
                    "eliminating {mu} from G({lam}) needs G({mu}), which is not available \
                     (cylindrical: {})",
                    is_cylindrical(&mu, s).unwrap_or(false)
                )));
            };
            let p = g.coeff(&mu).bar_symmetric_part();
            g = &g - &gmu.scalar_mul(&p);
        }
        debug_assert!(g.coeff(lam).is_one());
        done.insert(lam.clone(), g);
    }
    Ok(done)
}

fn group_by_weight(labels: Vec<Multipartition>, s: &Charge) -> Vec<Vec<Multipartition>> {
    let mut groups: BTreeMap<Vec<i64>, Vec<Multipartition>> = BTreeMap::new();
    for lam in labels {
        groups.entry(lam.content_multiset(s)).or_default().push(lam);
    }
    groups.into_values().collect()
}

/// `G(λ, s)` for every label `λ` of rank `n`.
pub fn canonical_basis<C: Coefficient>(n: usize, s: &Charge) -> Result<BTreeMap<Multipartition, Fock<C>>> {
    canonical_basis_with(n, s, TieBreak::default())
}

pub fn canonical_basis_with<C: Coefficient>(
    n: usize,
    s: &Charge,
    tb: TieBreak,
) -> Result<BTreeMap<Multipartition, Fock<C>>> {
    let groups = group_by_weight(labels(n, s)?, s);
    let parts: Vec<Result<BTreeMap<Multipartition, Fock<C>>>> = groups
        .par_iter()
        .map(|g| weight_space(g, s, tb))
        .collect();
    let mut out = BTreeMap::new();
    for p in parts {
        out.extend(p?);
    }
    Ok(out)
}

/// `G(λ, s)` alone; only its weight space is computed.
pub fn canonical_vector<C: Coefficient>(lam: &Multipartition, s: &Charge) -> Result<Fock<C>> {
    if !is_cylindrical(lam, s)? {
        return Err(Error::NotCylindrical(format!("{lam} at charge {:?}", s.values())));
    }
    let w = lam.content_multiset(s);
    let space: Vec<Multipartition> = labels(lam.rank(), s)?
        .into_iter()
        .filter(|m| m.content_multiset(s) == w)
        .collect();
    let mut all = weight_space(&space, s, TieBreak::default())?;
    Ok(all.remove(lam).expect("λ is one of the labels"))
}
