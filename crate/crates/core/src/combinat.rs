//! Partitions, multipartitions and charged box combinatorics.
//!
//! Boxes are 1-based `(row, column, component)` triples. For boxes of equal
//! charged content, the smaller component index comes first (`≺_s`).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing list of positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::Invalid(format!(
                "parts {parts:?} are not weakly decreasing positive integers"
            )));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Length (number of nonzero parts).
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    /// Part `a` (1-based); zero past the end.
    pub fn part(&self, a: usize) -> u32 {
        if a == 0 {
            return u32::MAX;
        }
        self.0.get(a - 1).copied().unwrap_or(0)
    }

    /// Conjugate partition.
    pub fn conjugate(&self) -> Partition {
        let first = self.part(1) as usize;
        Partition(
            (1..=first)
                .map(|b| self.0.iter().filter(|&&p| p as usize >= b).count() as u32)
                .collect(),
        )
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.0
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "∅");
        }
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join("."))
    }
}

/// An `l`-tuple of partitions.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Partition>", into = "Vec<Partition>")]
pub struct Multipartition(Vec<Partition>);

impl TryFrom<Vec<Partition>> for Multipartition {
    type Error = Error;
    fn try_from(v: Vec<Partition>) -> Result<Self> {
        if v.is_empty() {
            return Err(Error::Invalid("a multipartition needs at least one component".into()));
        }
        Ok(Multipartition(v))
    }
}

impl From<Multipartition> for Vec<Partition> {
    fn from(m: Multipartition) -> Vec<Partition> {
        m.0
    }
}

/// Which boundary boxes to list.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundaryKind {
    Addable,
    Removable,
}

/// A box `(row, column, component)`, all 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Node {
    pub row: usize,
    pub col: usize,
    pub comp: usize,
}

impl Node {
    pub fn new(row: usize, col: usize, comp: usize) -> Self {
        Node { row, col, comp }
    }

    /// `col − row + s_comp`.
    pub fn charged_content(&self, s: &Charge) -> i64 {
        self.col as i64 - self.row as i64 + s.get(self.comp)
    }
}

impl Multipartition {
    pub fn new(components: Vec<Partition>) -> Result<Self> {
        Multipartition::try_from(components)
    }

    /// Builds from raw part lists; panics on malformed input (test and literal use).
    pub fn from_parts(parts: &[&[u32]]) -> Self {
        Multipartition(
            parts
                .iter()
                .map(|p| Partition::new(p.to_vec()).expect("malformed partition literal"))
                .collect(),
        )
    }

    pub fn empty(level: usize) -> Self {
        assert!(level >= 1);
        Multipartition(vec![Partition::empty(); level])
    }

    pub fn level(&self) -> usize {
        self.0.len()
    }

    pub fn rank(&self) -> usize {
        self.0.iter().map(Partition::rank).sum()
    }

    pub fn components(&self) -> &[Partition] {
        &self.0
    }

    /// Component `c` (1-based).
    pub fn component(&self, c: usize) -> &Partition {
        &self.0[c - 1]
    }

    pub fn contains(&self, node: &Node) -> bool {
        node.comp >= 1
            && node.comp <= self.level()
            && node.row >= 1
            && node.col >= 1
            && node.col as u32 <= self.component(node.comp).part(node.row)
    }

    /// Boxes of the Young diagram.
    pub fn nodes(&self) -> impl Iterator<Item = Node> + '_ {
        self.0.iter().enumerate().flat_map(|(ci, p)| {
            p.parts().iter().enumerate().flat_map(move |(ri, &len)| {
                (1..=len as usize).map(move |b| Node::new(ri + 1, b, ci + 1))
            })
        })
    }

    /// Sorted multiset of charged contents of all boxes; this determines the weight.
    pub fn content_multiset(&self, s: &Charge) -> Vec<i64> {
        let mut v: Vec<i64> = self.nodes().map(|n| n.charged_content(s)).collect();
        v.sort_unstable();
        v
    }

    /// Addable or removable boxes with their charged contents, ordered by
    /// `(content, component)`.
    pub fn boundary_boxes(&self, s: &Charge, kind: BoundaryKind) -> Vec<(Node, i64)> {
        let mut out = Vec::new();
        for (ci, p) in self.0.iter().enumerate() {
            let c = ci + 1;
            match kind {
                BoundaryKind::Addable => {
                    for a in 1..=p.len() + 1 {
                        if a == 1 || p.part(a - 1) > p.part(a) {
                            let n = Node::new(a, p.part(a) as usize + 1, c);
                            out.push((n, n.charged_content(s)));
                        }
                    }
                }
                BoundaryKind::Removable => {
                    for a in 1..=p.len() {
                        if p.part(a) > p.part(a + 1) {
                            let n = Node::new(a, p.part(a) as usize, c);
                            out.push((n, n.charged_content(s)));
                        }
                    }
                }
            }
        }
        out.sort_by_key(|(n, k)| (*k, n.comp));
        debug_assert!(
            out.windows(2)
                .all(|w| w[0].1 != w[1].1 || w[0].0.comp != w[1].0.comp),
            "two boundary boxes of equal content in one component"
        );
        out
    }

    pub fn addable_of_content(&self, s: &Charge, i: i64) -> Vec<Node> {
        self.boundary_boxes(s, BoundaryKind::Addable)
            .into_iter()
            .filter(|(_, k)| *k == i)
            .map(|(n, _)| n)
            .collect()
    }

    pub fn removable_of_content(&self, s: &Charge, i: i64) -> Vec<Node> {
        self.boundary_boxes(s, BoundaryKind::Removable)
            .into_iter()
            .filter(|(_, k)| *k == i)
            .map(|(n, _)| n)
            .collect()
    }

    /// Adds an addable box. The caller guarantees addability.
    pub fn with_node(&self, node: &Node) -> Multipartition {
        let mut comps = self.0.clone();
        let parts = &mut comps[node.comp - 1].0;
        if node.row > parts.len() {
            parts.push(1);
        } else {
            parts[node.row - 1] += 1;
        }
        debug_assert_eq!(parts[node.row - 1] as usize, node.col);
        Multipartition(comps)
    }

    /// Removes a removable box. The caller guarantees removability.
    pub fn without_node(&self, node: &Node) -> Multipartition {
        let mut comps = self.0.clone();
        let parts = &mut comps[node.comp - 1].0;
        parts[node.row - 1] -= 1;
        if parts[node.row - 1] == 0 {
            parts.pop();
        }
        Multipartition(comps)
    }

    /// True if `self` ⊆ `other` as Young diagrams.
    pub fn is_contained_in(&self, other: &Multipartition) -> bool {
        self.level() == other.level()
            && self.0.iter().zip(other.0.iter()).all(|(a, b)| {
                a.len() <= b.len() && a.parts().iter().zip(b.parts()).all(|(x, y)| x <= y)
            })
    }

    /// The box `[other] \ [self]` if `other` is `self` plus exactly one box.
    pub fn added_node(&self, other: &Multipartition) -> Option<Node> {
        if other.rank() != self.rank() + 1 || !self.is_contained_in(other) {
            return None;
        }
        for c in 1..=self.level() {
            let (a, b) = (self.component(c), other.component(c));
            for r in 1..=b.len() {
                if b.part(r) != a.part(r) {
                    return Some(Node::new(r, b.part(r) as usize, c));
                }
            }
        }
        None
    }

    pub fn reversed(&self) -> Multipartition {
        Multipartition(self.0.iter().rev().cloned().collect())
    }

    pub fn conjugate(&self) -> Multipartition {
        Multipartition(self.0.iter().map(Partition::conjugate).collect())
    }
}

impl fmt::Debug for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(", "))
    }
}

/// Ordering convention a charge satisfies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Flavor {
    General,
    Decreasing,
    Increasing,
}

/// A multicharge `s = (s_1, …, s_l)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Charge(Vec<i64>);

impl Charge {
    pub fn new(values: Vec<i64>) -> Self {
        assert!(!values.is_empty(), "a charge needs at least one entry");
        Charge(values)
    }

    pub fn decreasing(values: Vec<i64>) -> Result<Self> {
        let s = Charge::new(values);
        if !s.is_decreasing() {
            return Err(Error::FlavorMismatch(format!("{s:?} is not decreasing")));
        }
        Ok(s)
    }

    pub fn level(&self) -> usize {
        self.0.len()
    }

    /// `s_c` (1-based).
    pub fn get(&self, c: usize) -> i64 {
        self.0[c - 1]
    }

    pub fn values(&self) -> &[i64] {
        &self.0
    }

    pub fn is_decreasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn is_increasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] <= w[1])
    }

    /// The most specific convention the values satisfy; constant charges report `Decreasing`.
    pub fn flavor(&self) -> Flavor {
        if self.is_decreasing() {
            Flavor::Decreasing
        } else if self.is_increasing() {
            Flavor::Increasing
        } else {
            Flavor::General
        }
    }

    pub fn reversed(&self) -> Charge {
        Charge(self.0.iter().rev().copied().collect())
    }

    pub fn negated(&self) -> Charge {
        Charge(self.0.iter().map(|x| -x).collect())
    }

    pub fn require_decreasing(&self) -> Result<()> {
        if self.is_decreasing() {
            Ok(())
        } else {
            Err(Error::FlavorMismatch(format!(
                "charge {:?} must be weakly decreasing",
                self.0
            )))
        }
    }
}

impl fmt::Debug for Charge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// `(N_i^≻(λ, μ), N_i^≺(λ, μ))` for `[μ] = [λ] ∪ {γ}` with `γ` of content `i`.
pub fn n_statistics(
    lambda: &Multipartition,
    mu: &Multipartition,
    i: i64,
    s: &Charge,
) -> Result<(i64, i64)> {
    let gamma = lambda
        .added_node(mu)
        .ok_or_else(|| Error::InvalidPair(format!("{mu} is not {lambda} plus one box")))?;
    if gamma.charged_content(s) != i {
        return Err(Error::InvalidPair(format!(
            "added box {gamma:?} has content {} not {i}",
            gamma.charged_content(s)
        )));
    }
    Ok(n_counts(lambda, gamma.comp, i, s))
}

/// Signed (addable − removable) counts of content-`i` boxes of `λ` in components
/// strictly above and strictly below `comp`.
pub(crate) fn n_counts(lambda: &Multipartition, comp: usize, i: i64, s: &Charge) -> (i64, i64) {
    let (mut succ, mut prec) = (0i64, 0i64);
    for (n, k) in lambda.boundary_boxes(s, BoundaryKind::Addable) {
        if k == i {
            if n.comp > comp {
                succ += 1;
            } else if n.comp < comp {
                prec += 1;
            }
        }
    }
    for (n, k) in lambda.boundary_boxes(s, BoundaryKind::Removable) {
        if k == i {
            if n.comp > comp {
                succ -= 1;
            } else if n.comp < comp {
                prec -= 1;
            }
        }
    }
    (succ, prec)
}

/// `N_i(λ)`: addable minus removable boxes of content `i`.
pub fn weight_statistic(lambda: &Multipartition, i: i64, s: &Charge) -> i64 {
    lambda.addable_of_content(s, i).len() as i64 - lambda.removable_of_content(s, i).len() as i64
}

/// Cylindricity for a weakly decreasing charge, in the orientation matching the
/// Fock action of [`crate::fock`]: `λ^{(k)}_{i + s_k − s_{k+1}} ≤ λ^{(k+1)}_i` for
/// all `k < l`, `i ≥ 1`. These are exactly the labels of the crystal of `V_s`.
pub fn is_cylindrical(lambda: &Multipartition, s: &Charge) -> Result<bool> {
    s.require_decreasing()?;
    check_level(lambda, s)?;
    for k in 1..lambda.level() {
        let shift = (s.get(k) - s.get(k + 1)) as usize;
        let upper = lambda.component(k);
        let lower = lambda.component(k + 1);
        let rows = upper.len().max(lower.len() + 1);
        for i in 1..=rows {
            if upper.part(i + shift) > lower.part(i) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub(crate) fn check_level(lambda: &Multipartition, s: &Charge) -> Result<()> {
    if lambda.level() != s.level() {
        return Err(Error::ShapeMismatch(format!(
            "{lambda} has {} components but charge {s:?} has {}",
            lambda.level(),
            s.level()
        )));
    }
    Ok(())
}

/// All partitions of `n`, in reverse lexicographic order.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn rec(n: usize, max: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=n.min(max)).rev() {
            cur.push(p as u32);
            rec(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// All `l`-multipartitions of `n`, sorted.
pub fn multipartitions(n: usize, l: usize) -> Vec<Multipartition> {
    assert!(l >= 1);
    let by_size: Vec<Vec<Partition>> = (0..=n).map(partitions).collect();
    let mut out = Vec::new();
    fn rec(
        remaining: usize,
        slots: usize,
        by_size: &[Vec<Partition>],
        cur: &mut Vec<Partition>,
        out: &mut Vec<Multipartition>,
    ) {
        if slots == 1 {
            for p in &by_size[remaining] {
                cur.push(p.clone());
                out.push(Multipartition(cur.clone()));
                cur.pop();
            }
            return;
        }
        for k in 0..=remaining {
            for p in &by_size[k] {
                cur.push(p.clone());
                rec(remaining - k, slots - 1, by_size, cur, out);
                cur.pop();
            }
        }
    }
    rec(n, l, &by_size, &mut Vec::new(), &mut out);
    out.sort();
    out
}
