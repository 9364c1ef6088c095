//! Charged symbols (β-number tables) and their combinatorics.
//!
//! A [`Symbol`] stores, for each component `c`, the explicit tail of a
//! semi-infinite strictly increasing sequence. All rows share a common
//! `base`: entry `k` of every row sits at position `base + k`, and every
//! position `j < base` implicitly holds the frozen value `j`. With
//! truncation `m` and charge `s`, row `c` has `s_c + m` entries and
//! `base = 1 − m`. The finite flavor used for families and b-invariants is
//! the case `base = 0`, where row `c` has exactly `s_c` nonnegative entries.
//!
//! Rows are indexed top (`c = 1`) to bottom (`c = l`) and are aligned by
//! position, i.e. left-justified once truncated.

mod family;
mod simple;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::combinat::{Charge, Multipartition, Partition};
use crate::error::{Error, Result};

pub use family::{
    dominance_leq, enumerate_family, minimal_symbol, weight_sequence, z_order, FamilyKey,
};
pub use simple::{
    admissible_sigmas, expand_simple, is_simple, m_statistic, simple_multipartition,
    AdmissibleSigma,
};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol {
    rows: Vec<Vec<i64>>,
    base: i64,
}

impl Symbol {
    /// Builds a symbol from explicit rows with the given base position.
    pub fn new(rows: Vec<Vec<i64>>, base: i64) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::Invalid("a symbol needs at least one row".into()));
        }
        for (c, row) in rows.iter().enumerate() {
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::Invalid(format!("row {} {row:?} is not strictly increasing", c + 1)));
            }
            if row.first().is_some_and(|&e| e < base) {
                return Err(Error::Invalid(format!(
                    "row {} {row:?} collides with frozen entries below {base}",
                    c + 1
                )));
            }
        }
        Ok(Symbol { rows, base })
    }

    /// A finite symbol: row `c` has `s_c` nonnegative entries.
    pub fn finite(rows: Vec<Vec<i64>>) -> Result<Self> {
        Symbol::new(rows, 0)
    }

    /// Builds from the JSON triple `(charge, m, rows)`.
    pub fn from_charge_rows(charge: &Charge, m: i64, rows: Vec<Vec<i64>>) -> Result<Self> {
        if charge.level() != rows.len() {
            return Err(Error::ShapeMismatch("charge and rows differ in length".into()));
        }
        for (c, row) in rows.iter().enumerate() {
            if row.len() as i64 != charge.get(c + 1) + m {
                return Err(Error::ShapeMismatch(format!(
                    "row {} must have s_c + m = {} entries, found {}",
                    c + 1,
                    charge.get(c + 1) + m,
                    row.len()
                )));
            }
        }
        Symbol::new(rows, 1 - m)
    }

    /// The empty-multipartition symbol `S⁰`.
    pub fn empty(s: &Charge, m: i64) -> Result<Self> {
        symbol_of(&Multipartition::empty(s.level()), s, m)
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn row(&self, c: usize) -> &[i64] {
        &self.rows[c - 1]
    }

    pub fn level(&self) -> usize {
        self.rows.len()
    }

    pub fn base(&self) -> i64 {
        self.base
    }

    /// Truncation `m = 1 − base`.
    pub fn m(&self) -> i64 {
        1 - self.base
    }

    /// Row lengths; for a finite symbol this is its finite charge.
    pub fn lengths(&self) -> Vec<usize> {
        self.rows.iter().map(Vec::len).collect()
    }

    /// The semi-infinite charge, `s_c = len_c − m`.
    pub fn charge(&self) -> Charge {
        Charge::new(self.rows.iter().map(|r| r.len() as i64 - self.m()).collect())
    }

    pub fn is_finite(&self) -> bool {
        self.base == 0
    }

    pub(crate) fn require_finite(&self) -> Result<()> {
        if self.is_finite() {
            Ok(())
        } else {
            Err(Error::FlavorMismatch(format!(
                "expected a finite symbol (base 0), found base {}",
                self.base
            )))
        }
    }

    /// Same multipartition, rewritten in the finite flavor with the same row lengths.
    pub fn to_finite(&self) -> Symbol {
        let shift = -self.base;
        Symbol {
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|e| e + shift).collect())
                .collect(),
            base: 0,
        }
    }

    /// Prepends `extra` frozen entries to every row (truncation `m ↦ m + extra`).
    pub fn widened(&self, extra: i64) -> Symbol {
        assert!(extra >= 0);
        let base = self.base - extra;
        Symbol {
            rows: self
                .rows
                .iter()
                .map(|r| (base..self.base).chain(r.iter().copied()).collect())
                .collect(),
            base,
        }
    }

    /// Whether value `v` is a bead of row `c` (frozen beads included).
    pub fn contains(&self, c: usize, v: i64) -> bool {
        v < self.base || self.rows[c - 1].binary_search(&v).is_ok()
    }

    /// Multiset of explicit entries, sorted.
    pub fn entries(&self) -> Vec<i64> {
        let mut v: Vec<i64> = self.rows.iter().flatten().copied().collect();
        v.sort_unstable();
        v
    }

    /// Columns weakly increase from each row to the next, position by
    /// position. Equivalent to the multipartition being cylindrical.
    pub fn is_standard(&self) -> Result<bool> {
        self.charge().require_decreasing()?;
        Ok(self.rows.windows(2).all(|w| {
            w[1].iter().zip(w[0].iter()).all(|(lower, upper)| upper <= lower)
        }))
    }

    pub(crate) fn with_rows(&self, rows: Vec<Vec<i64>>) -> Symbol {
        Symbol {
            rows,
            base: self.base,
        }
    }

    /// Renders one bracketed row per line, e.g. `[ 0, 1, 2, 4 ]`.
    pub fn to_text(&self) -> String {
        self.rows
            .iter()
            .map(|r| {
                let e: Vec<String> = r.iter().map(|x| x.to_string()).collect();
                format!("[ {} ]", e.join(", "))
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Symbol(base={}, {:?})", self.base, self.rows)
    }
}

#[derive(Serialize, Deserialize)]
struct SymbolWire {
    charge: Vec<i64>,
    m: i64,
    rows: Vec<Vec<i64>>,
}

impl Serialize for Symbol {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SymbolWire {
            charge: self.charge().values().to_vec(),
            m: self.m(),
            rows: self.rows.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Symbol {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = SymbolWire::deserialize(d)?;
        if w.charge.is_empty() {
            return Err(serde::de::Error::custom("empty charge"));
        }
        Symbol::from_charge_rows(&Charge::new(w.charge), w.m, w.rows)
            .map_err(serde::de::Error::custom)
    }
}

/// The symbol of `λ` at charge `s` and truncation `m`.
pub fn symbol_of(lambda: &Multipartition, s: &Charge, m: i64) -> Result<Symbol> {
    crate::combinat::check_level(lambda, s)?;
    let base = 1 - m;
    let mut rows = Vec::with_capacity(s.level());
    for (ci, part) in lambda.components().iter().enumerate() {
        let len = s.get(ci + 1) + m;
        if len < 0 || (part.len() as i64) > len {
            return Err(Error::TruncationTooSmall(format!(
                "component {} has {} parts but only {len} entries are available at m = {m}",
                ci + 1,
                part.len()
            )));
        }
        let len = len as usize;
        rows.push(
            (0..len)
                .map(|k| part.part(len - k) as i64 + base + k as i64)
                .collect(),
        );
    }
    Ok(Symbol { rows, base })
}

/// Smallest truncation at which `λ` fits at charge `s`.
pub fn min_truncation(lambda: &Multipartition, s: &Charge) -> i64 {
    lambda
        .components()
        .iter()
        .enumerate()
        .map(|(ci, p)| (p.len() as i64 - s.get(ci + 1)).max(-s.get(ci + 1)))
        .max()
        .unwrap_or(0)
        .max(0)
}

/// The symbol of `λ` in the finite flavor with row lengths `lengths`.
pub fn finite_symbol_of(lambda: &Multipartition, lengths: &[usize]) -> Result<Symbol> {
    let s = Charge::new(lengths.iter().map(|&x| x as i64 - 1).collect());
    symbol_of(lambda, &s, 1)
}

/// The multipartition `λ_S`.
pub fn partition_of(sym: &Symbol) -> Multipartition {
    let comps = sym
        .rows
        .iter()
        .map(|row| {
            let len = row.len();
            let parts: Vec<u32> = (1..=len)
                .map(|a| {
                    let k = len - a;
                    (row[k] - sym.base - k as i64) as u32
                })
                .collect();
            Partition::new(parts).expect("strictly increasing rows give partitions")
        })
        .collect();
    Multipartition::new(comps).expect("symbols have at least one row")
}
