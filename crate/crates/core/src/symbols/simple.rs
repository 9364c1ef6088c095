//! Simple symbols and the closed-form expansion over admissible permutations.
//!
//! Columns are position-aligned (left-justified). The column reading used
//! for simplicity goes top row to bottom row inside a column, columns left
//! to right.

use super::{partition_of, symbol_of, FamilyKey, Symbol};
use crate::combinat::{Charge, Multipartition};
use crate::error::{Error, Result};
use crate::fock::Fock;
use crate::laurent::Laurent;
use crate::scalar::Coefficient;

/// One admissible column-wise permutation together with its data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissibleSigma {
    /// `perms[k][r]`: the row of `S` whose column-`k` entry lands in row `r`.
    pub perms: Vec<Vec<usize>>,
    pub length: usize,
    pub permuted: Symbol,
    pub m_stat: usize,
}

impl AdmissibleSigma {
    pub fn exponent(&self) -> i64 {
        self.length as i64 - self.m_stat as i64
    }
}

fn column_rows(sym: &Symbol, k: usize) -> Vec<usize> {
    (0..sym.level()).filter(|&r| sym.rows[r].len() > k).collect()
}

fn width(sym: &Symbol) -> usize {
    sym.rows.iter().map(Vec::len).max().unwrap_or(0)
}

/// The column reading is weakly increasing.
pub fn is_simple(sym: &Symbol) -> bool {
    let mut last = i64::MIN;
    for k in 0..width(sym) {
        for r in column_rows(sym, k) {
            let v = sym.rows[r][k];
            if v < last {
                return false;
            }
            last = v;
        }
    }
    true
}

/// The unique member of the family whose column reading is sorted.
pub fn simple_multipartition(key: &FamilyKey) -> Result<Symbol> {
    let mut rows: Vec<Vec<i64>> = key.lengths.iter().map(|&n| Vec::with_capacity(n)).collect();
    let w = key.lengths.iter().copied().max().unwrap_or(0);
    let mut it = key.entries.iter();
    for k in 0..w {
        for (r, &len) in key.lengths.iter().enumerate() {
            if len > k {
                rows[r].push(*it.next().expect("entry count matches lengths"));
            }
        }
    }
    Symbol::finite(rows).map_err(|_| {
        Error::InfeasibleKey(format!(
            "sorted column filling of {:?} does not give increasing rows",
            key.entries
        ))
    })
}

/// Distinct arrangements of `vals`, lexicographic.
fn arrangements(vals: &[i64]) -> Vec<Vec<i64>> {
    let mut sorted = vals.to_vec();
    sorted.sort_unstable();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(sorted.len());
    let mut used = vec![false; sorted.len()];
    fn go(sorted: &[i64], used: &mut [bool], cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == sorted.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..sorted.len() {
            if used[i] || (i > 0 && sorted[i] == sorted[i - 1] && !used[i - 1]) {
                continue;
            }
            used[i] = true;
            cur.push(sorted[i]);
            go(sorted, used, cur, out);
            cur.pop();
            used[i] = false;
        }
    }
    go(&sorted, &mut used, &mut cur, &mut out);
    out
}

/// Minimal-length permutation carrying `src` to `dst`: equal values keep their order.
fn minimal_perm(src: &[i64], dst: &[i64]) -> Vec<usize> {
    let mut taken = vec![false; src.len()];
    dst.iter()
        .map(|v| {
            let i = (0..src.len())
                .find(|&i| !taken[i] && src[i] == *v)
                .expect("dst is an arrangement of src");
            taken[i] = true;
            i
        })
        .collect()
}

fn inversions(p: &[usize]) -> usize {
    let mut n = 0;
    for a in 0..p.len() {
        for b in a + 1..p.len() {
            if p[a] > p[b] {
                n += 1;
            }
        }
    }
    n
}

/// `M(S^σ)`: pairs of equal entries in adjacent columns, the left one in a
/// strictly higher row than the right one.
pub fn m_statistic(sym: &Symbol) -> usize {
    let mut m = 0;
    for k in 1..width(sym) {
        let left = column_rows(sym, k - 1);
        let right = column_rows(sym, k);
        for &a in &left {
            for &b in &right {
                if a < b && sym.rows[a][k - 1] == sym.rows[b][k] {
                    m += 1;
                }
            }
        }
    }
    m
}

/// All admissible `σ` for a simple symbol.
pub fn admissible_sigmas(sym: &Symbol) -> Result<Vec<AdmissibleSigma>> {
    if !is_simple(sym) {
        return Err(Error::NotSimple(format!("{sym:?}")));
    }
    let w = width(sym);
    let cols: Vec<(Vec<usize>, Vec<i64>)> = (0..w)
        .map(|k| {
            let rows = column_rows(sym, k);
            let vals = rows.iter().map(|&r| sym.rows[r][k]).collect();
            (rows, vals)
        })
        .collect();
    let options: Vec<Vec<Vec<i64>>> = cols.iter().map(|(_, v)| arrangements(v)).collect();

    let mut out = Vec::new();
    let mut rows: Vec<Vec<i64>> = sym.rows.iter().map(|r| Vec::with_capacity(r.len())).collect();
    let mut choice = Vec::with_capacity(w);
    fn go(
        k: usize,
        cols: &[(Vec<usize>, Vec<i64>)],
        options: &[Vec<Vec<i64>>],
        rows: &mut Vec<Vec<i64>>,
        choice: &mut Vec<usize>,
        emit: &mut dyn FnMut(&[usize], &[Vec<i64>]),
    ) {
        if k == cols.len() {
            emit(choice, rows);
            return;
        }
        let (present, _) = &cols[k];
        'opt: for (oi, arr) in options[k].iter().enumerate() {
            for (&r, &v) in present.iter().zip(arr) {
                if rows[r].last().is_some_and(|&p| p >= v) {
                    continue 'opt;
                }
            }
            for (&r, &v) in present.iter().zip(arr) {
                rows[r].push(v);
            }
            choice.push(oi);
            go(k + 1, cols, options, rows, choice, emit);
            choice.pop();
            for &r in present {
                rows[r].pop();
            }
        }
    }
    go(0, &cols, &options, &mut rows, &mut choice, &mut |choice, rows| {
        let mut perms = Vec::with_capacity(choice.len());
        let mut length = 0;
        for (k, &oi) in choice.iter().enumerate() {
            let (present, vals) = &cols[k];
            let p = minimal_perm(vals, &options[k][oi]);
            length += inversions(&p);
            perms.push(p.into_iter().map(|i| present[i]).collect());
        }
        let permuted = sym.with_rows(rows.to_vec());
        let m_stat = m_statistic(&permuted);
        out.push(AdmissibleSigma {
            perms,
            length,
            permuted,
            m_stat,
        });
    });
    Ok(out)
}

/// `Σ_σ q^{l(σ) − M(S^σ)} |λ^σ, s⟩` over admissible `σ`.
pub fn expand_simple<C: Coefficient>(
    lambda: &Multipartition,
    s: &Charge,
    m: i64,
) -> Result<Fock<C>> {
    let sym = symbol_of(lambda, s, m)?;
    expand_simple_symbol(&sym)
}

pub(crate) fn expand_simple_symbol<C: Coefficient>(sym: &Symbol) -> Result<Fock<C>> {
    let sigmas = admissible_sigmas(sym)?;
    let s = sym.charge();
    let mut v = Fock::zero(s, partition_of(sym).rank());
    for sg in sigmas {
        let mu = partition_of(&sg.permuted);
        if !v.coeff(&mu).is_zero() {
            return Err(Error::NotSimple(format!(
                "two admissible permutations give {mu}"
            )));
        }
        v.add_term(mu, Laurent::monomial(C::one(), sg.exponent()));
    }
    Ok(v)
}
