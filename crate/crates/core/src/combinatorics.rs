//! Compositions, weak compositions and partitions.
//!
//! All three are thin wrappers around a `Vec<usize>` of parts, written left
//! to right. The empty composition `()` is the unique composition of zero and
//! indexes the unit `M_() = F_() = S_() = 1`.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite sequence of nonnegative integers.
///
/// Trailing zeros are data: the number of parts fixes the number of rows of
/// the augmented diagram built on top of it.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeakComposition(Vec<usize>);

/// A finite sequence of strictly positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Composition(Vec<usize>);

/// A weakly decreasing sequence of strictly positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl WeakComposition {
    pub fn new(parts: Vec<usize>) -> Self {
        WeakComposition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of parts, zeros included.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Drops the zero parts, keeping the order of the others.
    pub fn collapse(&self) -> Composition {
        Composition(self.0.iter().copied().filter(|&p| p > 0).collect())
    }

    pub fn to_partition(&self) -> Partition {
        Partition::from_unsorted(self.0.iter().copied())
    }

    /// The 1-indexed positions of the nonzero parts.
    pub fn foundation(&self) -> BTreeSet<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &p)| p > 0)
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn reversal(&self) -> WeakComposition {
        WeakComposition(self.0.iter().rev().copied().collect())
    }
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if let Some(pos) = parts.iter().position(|&p| p == 0) {
            return Err(Error::invalid(
                "composition",
                format!("part {} is zero", pos + 1),
            ));
        }
        Ok(Composition(parts))
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(parts.iter().all(|&p| p > 0));
        Composition(parts)
    }

    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    /// The composition `(1, 1, ..., 1)` with `n` parts.
    pub fn ones(n: usize) -> Self {
        Composition(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn max_part(&self) -> usize {
        self.0.iter().copied().max().unwrap_or(0)
    }

    pub fn reversal(&self) -> Composition {
        Composition(self.0.iter().rev().copied().collect())
    }

    pub fn to_partition(&self) -> Partition {
        Partition::from_unsorted(self.0.iter().copied())
    }

    pub fn to_weak(&self) -> WeakComposition {
        WeakComposition(self.0.clone())
    }

    /// All compositions `b` with `self ⪰ b`, i.e. every refinement of `self`.
    pub fn refinements(&self) -> Vec<Composition> {
        let mut out = vec![Vec::new()];
        for &part in &self.0 {
            let pieces = enumerate_compositions(part);
            let mut next = Vec::with_capacity(out.len() * pieces.len());
            for prefix in &out {
                for piece in &pieces {
                    let mut v: Vec<usize> = prefix.clone();
                    v.extend_from_slice(piece.parts());
                    next.push(v);
                }
            }
            out = next;
        }
        out.into_iter().map(Composition).collect()
    }
}

impl From<Composition> for Vec<usize> {
    fn from(c: Composition) -> Self {
        c.0
    }
}

impl TryFrom<Vec<usize>> for Composition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Composition::new(v)
    }
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::invalid("partition", "zero part"));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::invalid("partition", "parts must weakly decrease"));
        }
        Ok(Partition(parts))
    }

    /// Sorts the positive values into weakly decreasing order; zeros are dropped.
    pub fn from_unsorted(parts: impl IntoIterator<Item = usize>) -> Self {
        let mut v: Vec<usize> = parts.into_iter().filter(|&p| p > 0).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition(v)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Row `i` (0-indexed), or 0 past the last row.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.0.first().copied().unwrap_or(0);
        Partition(
            (0..width)
                .map(|j| self.0.iter().filter(|&&p| p > j).count())
                .collect(),
        )
    }

    /// Diagram containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    pub fn to_composition(&self) -> Composition {
        Composition(self.0.clone())
    }

    /// Every distinct rearrangement of the parts, in ▶-descending order.
    pub fn rearrangements(&self) -> Vec<Composition> {
        let mut parts = self.0.clone();
        parts.sort_unstable();
        let mut out = Vec::new();
        loop {
            out.push(Composition(parts.clone()));
            if !next_permutation(&mut parts) {
                break;
            }
        }
        out.sort_by(|a, b| b.cmp(a));
        out
    }

    /// Lengths of the columns of the diagram, i.e. the conjugate's parts.
    pub fn column_lengths(&self) -> Vec<usize> {
        self.conjugate().0
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// The descent-style subset `{b1, b1+b2, ..., b1+...+b_{k-1}}` of `[n-1]`.
pub fn subset_of(b: &Composition, n: usize) -> Result<BTreeSet<usize>> {
    if b.size() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            found: b.size(),
        });
    }
    let mut acc = 0;
    let mut out = BTreeSet::new();
    for &p in &b.0[..b.len().saturating_sub(1)] {
        acc += p;
        out.insert(acc);
    }
    Ok(out)
}

/// Inverse of [`subset_of`]: successive differences of the sorted subset,
/// closed off with `n - max`.
pub fn composition_of(set: &BTreeSet<usize>, n: usize) -> Result<Composition> {
    if n == 0 {
        return match set.iter().next() {
            None => Ok(Composition::empty()),
            Some(&v) => Err(Error::OutOfRange { value: v, max: 0 }),
        };
    }
    let mut parts = Vec::with_capacity(set.len() + 1);
    let mut prev = 0;
    for &s in set {
        if s == 0 || s >= n {
            return Err(Error::OutOfRange {
                value: s,
                max: n - 1,
            });
        }
        parts.push(s - prev);
        prev = s;
    }
    parts.push(n - prev);
    Ok(Composition(parts))
}

/// `true` when `a` is obtained from `b` by adding together adjacent parts.
pub fn coarsens(a: &Composition, b: &Composition) -> bool {
    if a.size() != b.size() {
        return false;
    }
    let mut acc = 0;
    let mut cuts_b = BTreeSet::new();
    for &p in b.parts() {
        acc += p;
        cuts_b.insert(acc);
    }
    let mut acc = 0;
    a.parts().iter().all(|&p| {
        acc += p;
        cuts_b.contains(&acc)
    })
}

/// Lexicographic comparison of `λ(a)` against `λ(b)`, then of `a` against `b`.
///
/// `Ordering::Greater` means `a ▶ b`.
pub fn triangle_compare(a: &Composition, b: &Composition) -> Result<Ordering> {
    if a.size() != b.size() {
        return Err(Error::SizeMismatch {
            expected: a.size(),
            found: b.size(),
        });
    }
    Ok(triangle_cmp(a, b))
}

// Equal sizes make plain `Vec` ordering agree with zero-padded lex order.
pub(crate) fn triangle_cmp(a: &Composition, b: &Composition) -> Ordering {
    a.to_partition()
        .cmp(&b.to_partition())
        .then_with(|| a.cmp(b))
}

/// Sort key placing compositions by size, then ▶-descending within a size.
pub(crate) fn display_cmp(a: &Composition, b: &Composition) -> Ordering {
    a.size().cmp(&b.size()).then_with(|| triangle_cmp(b, a))
}

/// All `2^(n-1)` compositions of `n`, ▶-descending. `n = 0` gives `[()]`.
pub fn enumerate_compositions(n: usize) -> Vec<Composition> {
    fn rec(rest: usize, prefix: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if rest == 0 {
            out.push(Composition(prefix.clone()));
            return;
        }
        for first in 1..=rest {
            prefix.push(first);
            rec(rest - first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut out);
    out.sort_by(|a, b| triangle_cmp(b, a));
    out
}

/// All partitions of `n` in lexicographically decreasing order.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    fn rec(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for first in (1..=rest.min(max)).rev() {
            prefix.push(first);
            rec(rest - first, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Every weak composition with exactly `n` parts collapsing to `a`, ordered
/// by the positions of the nonzero parts (lexicographically).
pub fn expand_to_weak(a: &Composition, n: usize) -> Result<Vec<WeakComposition>> {
    let k = a.len();
    if n < k {
        return Err(Error::TooFewPositions {
            needed: k,
            available: n,
        });
    }
    let mut out = Vec::new();
    for positions in subsets_of_size(n, k) {
        let mut parts = vec![0; n];
        for (&pos, &p) in positions.iter().zip(a.parts()) {
            parts[pos] = p;
        }
        out.push(WeakComposition(parts));
    }
    Ok(out)
}

/// Every weak composition of `size` with exactly `n` parts: compositions of
/// `size` into at most `n` parts, each expanded to length `n`.
pub fn enumerate_weak_compositions(size: usize, n: usize) -> Vec<WeakComposition> {
    enumerate_compositions(size)
        .iter()
        .filter(|a| a.len() <= n)
        .flat_map(|a| expand_to_weak(a, n).expect("a fits in n parts"))
        .collect()
}

/// All `k`-subsets of `{0, .., n-1}` as increasing vectors, lexicographically.
pub(crate) fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        let need = k - cur.len();
        for i in start..=n.saturating_sub(need) {
            if i >= n {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(0, n, k, &mut Vec::new(), &mut out);
    }
    out
}

fn parse_parts(s: &str, what: &'static str) -> Result<Vec<usize>> {
    let err = || Error::Parse {
        what,
        input: s.to_string(),
    };
    let trimmed = s.trim();
    let inner = match (trimmed.strip_prefix('('), trimmed.strip_suffix(')')) {
        (Some(_), Some(_)) => &trimmed[1..trimmed.len() - 1],
        (None, None) => trimmed,
        _ => return Err(err()),
    };
    let inner = inner.trim();
    if inner.is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| err()))
        .collect()
}

fn write_parts(f: &mut fmt::Formatter<'_>, parts: &[usize]) -> fmt::Result {
    write!(f, "(")?;
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{p}")?;
    }
    write!(f, ")")
}

impl FromStr for WeakComposition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_parts(s, "weak composition").map(WeakComposition)
    }
}

impl FromStr for Composition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let parts = parse_parts(s, "composition")?;
        Composition::new(parts).map_err(|_| Error::Parse {
            what: "composition",
            input: s.to_string(),
        })
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let parts = parse_parts(s, "partition")?;
        Partition::new(parts).map_err(|_| Error::Parse {
            what: "partition",
            input: s.to_string(),
        })
    }
}

impl fmt::Display for WeakComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.0)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> Composition {
        s.parse().unwrap()
    }

    fn w(s: &str) -> WeakComposition {
        s.parse().unwrap()
    }

    #[test]
    fn weak_composition_statistics() {
        let g = w("(3,2,0,4,2,0)");
        assert_eq!(g.collapse(), c("(3,2,4,2)"));
        assert_eq!(g.to_partition().parts(), &[4, 3, 2, 2]);
        assert_eq!(
            g.foundation().into_iter().collect::<Vec<_>>(),
            vec![1, 2, 4, 5]
        );
        assert_eq!(w("(0,0,0)").collapse(), Composition::empty());
        assert_eq!(w("(1,0,2)").collapse(), c("(1,2)"));
        assert!(w("()").to_partition().is_empty());
        assert_eq!(w("(1,3)").to_partition().parts(), &[3, 1]);
        assert!(w("(0,0)").foundation().is_empty());
        assert_eq!(w("(1,1)").foundation().len(), 2);
    }

    #[test]
    fn reversal_cases() {
        assert_eq!(c("(1,3,2)").reversal(), c("(2,3,1)"));
        assert_eq!(c("()").reversal(), c("()"));
        assert_eq!(c("(2,2)").reversal(), c("(2,2)"));
    }

    #[test]
    fn subset_correspondence() {
        let s = subset_of(&c("(1,3,2)"), 6).unwrap();
        assert_eq!(s.iter().copied().collect::<Vec<_>>(), vec![1, 4]);
        assert!(subset_of(&c("(5)"), 5).unwrap().is_empty());
        assert_eq!(subset_of(&c("(1,1,1)"), 3).unwrap().len(), 2);
        assert!(matches!(
            subset_of(&c("(1,1)"), 3),
            Err(Error::SizeMismatch { .. })
        ));

        let set: BTreeSet<usize> = [1, 4].into_iter().collect();
        assert_eq!(composition_of(&set, 6).unwrap(), c("(1,3,2)"));
        assert_eq!(composition_of(&BTreeSet::new(), 5).unwrap(), c("(5)"));
        let two: BTreeSet<usize> = [2].into_iter().collect();
        assert_eq!(composition_of(&two, 3).unwrap(), c("(2,1)"));
        let bad: BTreeSet<usize> = [3].into_iter().collect();
        assert!(matches!(
            composition_of(&bad, 3),
            Err(Error::OutOfRange { .. })
        ));
    }

    #[test]
    fn round_trips_small_sizes() {
        for n in 1..=10 {
            for b in enumerate_compositions(n) {
                let s = subset_of(&b, n).unwrap();
                assert_eq!(composition_of(&s, n).unwrap(), b);
            }
        }
        for n in 1..=8usize {
            for mask in 0u32..(1 << (n - 1)) {
                let set: BTreeSet<usize> = (1..n).filter(|i| mask & (1 << (i - 1)) != 0).collect();
                let b = composition_of(&set, n).unwrap();
                assert_eq!(subset_of(&b, n).unwrap(), set);
            }
        }
    }

    #[test]
    fn coarsening_examples() {
        assert!(coarsens(&c("(3,2,4,2)"), &c("(3,1,1,1,2,1,2)")));
        assert!(coarsens(&c("(2,1)"), &c("(2,1)")));
        assert!(!coarsens(&c("(1,2)"), &c("(2,1)")));
    }

    #[test]
    fn coarsening_is_partial_order() {
        for n in 1..=6 {
            let all = enumerate_compositions(n);
            for a in &all {
                assert!(coarsens(a, a));
                for b in &all {
                    if a != b && coarsens(a, b) {
                        assert!(!coarsens(b, a));
                    }
                    for d in &all {
                        if coarsens(a, b) && coarsens(b, d) {
                            assert!(coarsens(a, d));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn triangle_chain_for_four() {
        let expected: Vec<Composition> = [
            "(4)",
            "(3,1)",
            "(1,3)",
            "(2,2)",
            "(2,1,1)",
            "(1,2,1)",
            "(1,1,2)",
            "(1,1,1,1)",
        ]
        .iter()
        .map(|s| c(s))
        .collect();
        assert_eq!(enumerate_compositions(4), expected);
        assert_eq!(
            triangle_compare(&c("(1,3)"), &c("(2,2)")).unwrap(),
            Ordering::Greater
        );
        assert_eq!(
            triangle_compare(&c("(1,3)"), &c("(1,3)")).unwrap(),
            Ordering::Equal
        );
        assert!(triangle_compare(&c("(1)"), &c("(2)")).is_err());
    }

    #[test]
    fn triangle_is_strict_total_order() {
        for n in 1..=6 {
            let all = enumerate_compositions(n);
            for a in &all {
                for b in &all {
                    let ab = triangle_cmp(a, b);
                    assert_eq!(ab, triangle_cmp(b, a).reverse());
                    assert_eq!(ab == Ordering::Equal, a == b);
                    for d in &all {
                        if ab == Ordering::Greater && triangle_cmp(b, d) == Ordering::Greater {
                            assert_eq!(triangle_cmp(a, d), Ordering::Greater);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn composition_counts() {
        assert_eq!(enumerate_compositions(0), vec![Composition::empty()]);
        assert_eq!(enumerate_compositions(5).len(), 16);
        assert_eq!(enumerate_partitions(6).len(), 11);
    }

    #[test]
    fn weak_expansions() {
        let got = expand_to_weak(&c("(1,2)"), 3).unwrap();
        assert_eq!(got, vec![w("(1,2,0)"), w("(1,0,2)"), w("(0,1,2)")]);
        assert_eq!(expand_to_weak(&c("(4)"), 1).unwrap(), vec![w("(4)")]);
        assert_eq!(expand_to_weak(&c("(1,1)"), 3).unwrap().len(), 3);
        assert!(expand_to_weak(&c("(1,1)"), 1).is_err());
    }

    #[test]
    fn weak_expansion_counts_are_binomial() {
        fn binom(n: usize, k: usize) -> usize {
            (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
        }
        for m in 0..=6 {
            for a in enumerate_compositions(m) {
                for n in a.len()..=8 {
                    assert_eq!(expand_to_weak(&a, n).unwrap().len(), binom(n, a.len()));
                }
            }
        }
    }

    #[test]
    fn parsing_and_display() {
        assert_eq!(c("1,2,3"), c("(1,2,3)"));
        assert_eq!(c("( 1, 2 )").to_string(), "(1,2)");
        assert_eq!(c("()").to_string(), "()");
        assert_eq!(w("(1,2,0)").to_string(), "(1,2,0)");
        assert!("(1,0)".parse::<Composition>().is_err());
        assert!("(1,x)".parse::<Composition>().is_err());
        assert!("(1,2".parse::<Composition>().is_err());
        assert!("(1,2)".parse::<Partition>().is_err());
    }

    #[test]
    fn rearrangements_and_refinements() {
        let p: Partition = "(2,1,1)".parse().unwrap();
        let r: Vec<String> = p.rearrangements().iter().map(|c| c.to_string()).collect();
        assert_eq!(r, vec!["(2,1,1)", "(1,2,1)", "(1,1,2)"]);
        let refs = c("(2,1)").refinements();
        assert_eq!(refs, vec![c("(2,1)"), c("(1,1,1)")]);
        assert_eq!(c("(3,2)").refinements().len(), 8);
        assert_eq!(p.conjugate().parts(), &[3, 1]);
    }
}
