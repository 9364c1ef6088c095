//! Families of finite symbols, z-sequences and b-invariants.
//!
//! Here symbols are finite (base 0) and displayed right-justified: column
//! `col` of a width-`w` display holds entry `col − (w − len_c)` of row `c`.

use std::collections::{BTreeMap, HashSet};

use serde::{Deserialize, Serialize};

use super::Symbol;
use crate::error::{Error, Result};

/// Reading order of a finite shape: right-justified columns left to right,
/// each column from the bottom row to the top row. Items are `(row, k)`
/// with `row` 0-based and `k` the entry index inside the row.
pub fn z_order(lengths: &[usize]) -> Vec<(usize, usize)> {
    let width = lengths.iter().copied().max().unwrap_or(0);
    let mut out = Vec::with_capacity(lengths.iter().sum());
    for col in 0..width {
        for (row, &len) in lengths.iter().enumerate().rev() {
            if col + len >= width {
                out.push((row, col + len - width));
            }
        }
    }
    out
}

impl Symbol {
    /// `z(S)`: the entries in [`z_order`].
    pub fn z_sequence(&self) -> Result<Vec<i64>> {
        self.require_finite()?;
        Ok(z_order(&self.lengths())
            .into_iter()
            .map(|(r, k)| self.rows[r][k])
            .collect())
    }

    /// `(b, b′)` from the row-weighted sums.
    pub fn b_invariants(&self) -> Result<(i64, i64)> {
        self.require_finite()?;
        let l = self.level() as i64;
        let (mut b, mut bp) = (0i64, 0i64);
        for (i, row) in self.rows.iter().enumerate() {
            let s = row.len() as i64;
            for (k, &beta) in row.iter().enumerate() {
                let j = k as i64 + 1;
                let w = l * (s - j) + i as i64;
                b += w * (beta - j + 1);
                bp += w * beta;
            }
        }
        debug_assert_eq!(
            bp,
            weight_sequence(&self.lengths())
                .iter()
                .zip(self.z_sequence()?)
                .map(|(w, z)| w * z)
                .sum::<i64>()
        );
        Ok((b, bp))
    }

    /// `b(S) − b(S⁰)` for the empty symbol of the same shape.
    pub fn b_normalized(&self) -> Result<i64> {
        let (b, _) = self.b_invariants()?;
        let empty = Symbol::finite(
            self.lengths()
                .iter()
                .map(|&n| (0..n as i64).collect())
                .collect(),
        )?;
        Ok(b - empty.b_invariants()?.0)
    }

    pub fn family_key(&self) -> Result<FamilyKey> {
        self.require_finite()?;
        Ok(FamilyKey {
            lengths: self.lengths(),
            entries: self.entries(),
        })
    }
}

/// `z(W)` for the weight tuple with row `i`, entry `j` equal to `l(s_i − j) + i − 1`.
pub fn weight_sequence(lengths: &[usize]) -> Vec<i64> {
    let l = lengths.len() as i64;
    z_order(lengths)
        .into_iter()
        .map(|(r, k)| l * (lengths[r] as i64 - k as i64 - 1) + r as i64)
        .collect()
}

/// Underlying entry multiset of a family together with the row lengths.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilyKey {
    #[serde(rename = "charge")]
    pub lengths: Vec<usize>,
    pub entries: Vec<i64>,
}

impl FamilyKey {
    pub fn new(lengths: Vec<usize>, mut entries: Vec<i64>) -> Result<Self> {
        entries.sort_unstable();
        if lengths.is_empty() {
            return Err(Error::Invalid("family key needs at least one row".into()));
        }
        if entries.len() != lengths.iter().sum::<usize>() {
            return Err(Error::InfeasibleKey(format!(
                "{} entries cannot fill rows of lengths {lengths:?}",
                entries.len()
            )));
        }
        if entries.first().is_some_and(|&e| e < 0) {
            return Err(Error::InfeasibleKey("entries must be nonnegative".into()));
        }
        Ok(FamilyKey { lengths, entries })
    }

    fn counts(&self) -> (Vec<i64>, Vec<u32>) {
        let mut m: BTreeMap<i64, u32> = BTreeMap::new();
        for &e in &self.entries {
            *m.entry(e).or_default() += 1;
        }
        m.into_iter().unzip()
    }
}

struct Search<'a> {
    order: Vec<(usize, usize)>,
    values: Vec<i64>,
    lengths: &'a [usize],
    counts: Vec<u32>,
    last: Vec<Option<usize>>,
    placed: Vec<usize>,
    dead: HashSet<(usize, Vec<u32>, Vec<Option<usize>>)>,
}

impl Search<'_> {
    /// Depth-first search in z-order trying values ascending. `visit` returns
    /// false to stop. Returns false if stopped.
    fn run(&mut self, p: usize, visit: &mut dyn FnMut(&[usize]) -> bool) -> (bool, bool) {
        // (continue, found any)
        if p == self.order.len() {
            return (visit(&self.placed), true);
        }
        let state = (p, self.counts.clone(), self.last.clone());
        if self.dead.contains(&state) {
            return (true, false);
        }
        let row = self.order[p].0;
        let start = self.last[row].map_or(0, |v| v + 1);
        let mut found = false;
        for v in start..self.values.len() {
            if self.counts[v] == 0 {
                continue;
            }
            self.counts[v] -= 1;
            let prev = self.last[row].replace(v);
            self.placed.push(v);
            let (cont, f) = self.run(p + 1, visit);
            self.placed.pop();
            self.last[row] = prev;
            self.counts[v] += 1;
            found |= f;
            if !cont {
                return (false, found);
            }
        }
        if !found {
            self.dead.insert(state);
        }
        (true, found)
    }

    fn build(&self, placed: &[usize]) -> Symbol {
        let mut rows: Vec<Vec<i64>> = self.lengths.iter().map(|&n| vec![0; n]).collect();
        for (&(r, k), &v) in self.order.iter().zip(placed) {
            rows[r][k] = self.values[v];
        }
        Symbol { rows, base: 0 }
    }
}

fn search(key: &FamilyKey) -> Search<'_> {
    let (values, counts) = key.counts();
    Search {
        order: z_order(&key.lengths),
        values,
        lengths: &key.lengths,
        counts,
        last: vec![None; key.lengths.len()],
        placed: Vec::new(),
        dead: HashSet::new(),
    }
}

/// All symbols with the key's row lengths and entry multiset, in
/// lexicographic order of their z-sequences.
pub fn enumerate_family(key: &FamilyKey) -> Result<Vec<Symbol>> {
    let mut s = search(key);
    let mut found = Vec::new();
    s.run(0, &mut |placed| {
        found.push(placed.to_vec());
        true
    });
    if found.is_empty() {
        return Err(Error::InfeasibleKey(format!("no symbol has entries {:?}", key.entries)));
    }
    Ok(found.iter().map(|p| s.build(p)).collect())
}

/// `S_F`: extend the z-prefix by the least entry that can still be completed.
pub fn minimal_symbol(key: &FamilyKey) -> Result<Symbol> {
    let mut s = search(key);
    let mut first = None;
    s.run(0, &mut |placed| {
        first = Some(placed.to_vec());
        false
    });
    match first {
        Some(p) => Ok(s.build(&p)),
        None => Err(Error::InfeasibleKey(format!("no symbol has entries {:?}", key.entries))),
    }
}

/// Prefix sums of `z(S)` are all at most those of `z(T)`.
pub fn dominance_leq(s: &Symbol, t: &Symbol) -> Result<bool> {
    if s.lengths() != t.lengths() || s.base != t.base {
        return Err(Error::ShapeMismatch("symbols have different shapes".into()));
    }
    if s.entries().iter().sum::<i64>() != t.entries().iter().sum::<i64>() {
        return Err(Error::ShapeMismatch("symbols have different ranks".into()));
    }
    let (zs, zt) = (s.z_sequence()?, t.z_sequence()?);
    let (mut a, mut b) = (0i64, 0i64);
    for (x, y) in zs.iter().zip(&zt) {
        a += x;
        b += y;
        if a > b {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn paper_sf() -> Symbol {
        Symbol::finite(vec![vec![0, 1, 2, 8, 12], vec![0, 1, 2, 7, 11], vec![0, 5, 9]]).unwrap()
    }

    #[test]
    fn z_sequence_of_example() {
        assert_eq!(
            paper_sf().z_sequence().unwrap(),
            vec![0, 0, 1, 1, 0, 2, 2, 5, 7, 8, 9, 11, 12]
        );
        let one = Symbol::finite(vec![vec![1, 4, 6]]).unwrap();
        assert_eq!(one.z_sequence().unwrap(), vec![1, 4, 6]);
        assert!(matches!(
            Symbol::new(vec![vec![0]], -1).unwrap().z_sequence(),
            Err(Error::FlavorMismatch(_))
        ));
    }

    #[test]
    fn weight_sequence_is_strictly_decreasing() {
        for lengths in [vec![5, 5, 3], vec![3, 1], vec![2, 2, 2, 2], vec![4, 1, 3]] {
            let w = weight_sequence(&lengths);
            assert!(w.windows(2).all(|p| p[0] > p[1]), "{lengths:?}: {w:?}");
        }
        assert_eq!(weight_sequence(&[2, 1]), vec![2, 1, 0]);
    }

    #[test]
    fn minimal_symbol_of_example() {
        let key = FamilyKey::new(vec![5, 5, 3], vec![0, 0, 0, 1, 1, 2, 2, 5, 7, 8, 9, 11, 12]).unwrap();
        assert_eq!(minimal_symbol(&key).unwrap(), paper_sf());
        let fam = enumerate_family(&key).unwrap();
        assert!(fam.contains(&paper_sf()));
        let zs: Vec<_> = fam.iter().map(|s| s.z_sequence().unwrap()).collect();
        assert!(zs.windows(2).all(|w| w[0] < w[1]));
        let best = fam.iter().map(|s| s.b_invariants().unwrap().0).min().unwrap();
        assert_eq!(paper_sf().b_invariants().unwrap().0, best);
        assert_eq!(fam.iter().filter(|s| s.b_invariants().unwrap().0 == best).count(), 1);
        for s in &fam {
            assert!(dominance_leq(&paper_sf(), s).unwrap());
        }
    }

    #[test]
    fn empty_key_is_forced() {
        let key = FamilyKey::new(vec![5, 5, 3], vec![0, 0, 0, 1, 1, 1, 2, 2, 2, 3, 3, 4, 4]).unwrap();
        assert_eq!(enumerate_family(&key).unwrap().len(), 1);
        let s = &enumerate_family(&key).unwrap()[0];
        assert_eq!(s.b_normalized().unwrap(), 0);
    }

    #[test]
    fn infeasible_keys() {
        assert!(matches!(FamilyKey::new(vec![2], vec![0]), Err(Error::InfeasibleKey(_))));
        let key = FamilyKey::new(vec![2], vec![3, 3]).unwrap();
        assert!(matches!(enumerate_family(&key), Err(Error::InfeasibleKey(_))));
        assert!(matches!(minimal_symbol(&key), Err(Error::InfeasibleKey(_))));
    }

    #[test]
    fn single_row_family() {
        let key = FamilyKey::new(vec![3], vec![5, 0, 2]).unwrap();
        let fam = enumerate_family(&key).unwrap();
        assert_eq!(fam.len(), 1);
        assert_eq!(fam[0].row(1), &[0, 2, 5]);
        assert_eq!(fam[0].b_invariants().unwrap().1, 2);
    }

    #[test]
    fn dominance_shape_errors() {
        let a = Symbol::finite(vec![vec![0, 1]]).unwrap();
        let b = Symbol::finite(vec![vec![0, 2]]).unwrap();
        let c = Symbol::finite(vec![vec![0], vec![1]]).unwrap();
        assert!(matches!(dominance_leq(&a, &b), Err(Error::ShapeMismatch(_))));
        assert!(matches!(dominance_leq(&a, &c), Err(Error::ShapeMismatch(_))));
        assert!(dominance_leq(&a, &a).unwrap());
    }
}
