use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{descent_set, standard_positions, weight_of, write_rows};
use crate::combinatorics::{Composition, WeakComposition};
use crate::error::{Error, Result};

/// A composition tableau.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "ComtRepr", into = "ComtRepr")]
pub struct Comt {
    rows: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct ComtRepr {
    shape: Vec<usize>,
    rows: Vec<Vec<usize>>,
}

impl TryFrom<ComtRepr> for Comt {
    type Error = Error;

    fn try_from(r: ComtRepr) -> Result<Self> {
        let t = Comt::new(r.rows)?;
        if t.shape().parts() != r.shape.as_slice() {
            return Err(Error::invalid("ComT", "shape field disagrees with rows"));
        }
        Ok(t)
    }
}

impl From<Comt> for ComtRepr {
    fn from(t: Comt) -> Self {
        ComtRepr {
            shape: t.shape().parts().to_vec(),
            rows: t.rows,
        }
    }
}

/// Weakly decreasing rows, strictly increasing first column, and the triple
/// rule on the zero-padded rectangle.
pub fn is_comt(rows: &[Vec<usize>]) -> bool {
    if rows.iter().any(Vec::is_empty) || rows.iter().flatten().any(|&v| v == 0) {
        return false;
    }
    if rows.iter().any(|r| r.windows(2).any(|w| w[0] < w[1])) {
        return false;
    }
    if rows.windows(2).any(|w| w[0][0] >= w[1][0]) {
        return false;
    }
    let hat = |i: usize, k: usize| rows[i].get(k).copied().unwrap_or(0);
    let m = rows.iter().map(Vec::len).max().unwrap_or(0);
    for j in 0..rows.len() {
        for k in 1..m {
            let v = hat(j, k);
            if v == 0 {
                continue;
            }
            for i in 0..j {
                if v >= hat(i, k) && v <= hat(i, k - 1) {
                    return false;
                }
            }
        }
    }
    true
}

/// The triple rule for a new cell `(j, k)` (0-indexed, `k >= 1`) given the
/// complete rows above it.
fn triple_ok(rows: &[Vec<usize>], j: usize, k: usize, v: usize) -> bool {
    rows[..j].iter().all(|r| {
        let above = r.get(k).copied().unwrap_or(0);
        let above_left = r.get(k - 1).copied().unwrap_or(0);
        v < above || v > above_left
    })
}

impl Comt {
    pub fn empty() -> Self {
        Comt { rows: Vec::new() }
    }

    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        if !is_comt(&rows) {
            return Err(Error::invalid(
                "ComT",
                "rows violate the row, first-column or triple rule",
            ));
        }
        Ok(Comt { rows })
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<usize>>) -> Self {
        debug_assert!(is_comt(&rows), "not a ComT: {rows:?}");
        Comt { rows }
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<usize>> {
        self.rows
    }

    pub fn shape(&self) -> Composition {
        Composition::from_parts_unchecked(self.rows.iter().map(Vec::len).collect())
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Entry at `(row, col)`, 1-indexed.
    pub fn entry(&self, row: usize, col: usize) -> Option<usize> {
        self.rows
            .get(row.checked_sub(1)?)?
            .get(col.checked_sub(1)?)
            .copied()
    }

    pub fn first_column(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r[0]).collect()
    }

    pub fn max_entry(&self) -> usize {
        self.rows.last().map_or(0, |r| r[0])
    }

    pub fn weight(&self) -> WeakComposition {
        WeakComposition::new(weight_of(self.rows.iter().flatten()))
    }

    pub fn is_standard(&self) -> bool {
        standard_positions(&self.rows, &[]).is_ok()
    }

    pub fn descents(&self) -> Result<BTreeSet<usize>> {
        Ok(descent_set(&standard_positions(&self.rows, &[])?))
    }
}

pub fn comt_descents(t: &Comt) -> Result<BTreeSet<usize>> {
    t.descents()
}

impl fmt::Display for Comt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return write!(f, "()");
        }
        write_rows(f, &self.rows, |_| String::new())
    }
}

/// All ComTs of shape `a` with entries in `1..=max_entry`.
pub fn enumerate_comts(a: &Composition, max_entry: usize) -> Vec<Comt> {
    let mut out = Vec::new();
    let mut rows = vec![Vec::new(); a.len()];
    fill(
        a.parts(),
        max_entry,
        false,
        &mut rows,
        0,
        &mut 0u128,
        &mut out,
    );
    out
}

/// ComTs of shape `a` whose entries are `1..=|a|`, each once.
pub fn enumerate_standard_comts(a: &Composition) -> Vec<Comt> {
    let mut out = Vec::new();
    let mut rows = vec![Vec::new(); a.len()];
    fill(
        a.parts(),
        a.size(),
        true,
        &mut rows,
        0,
        &mut 0u128,
        &mut out,
    );
    out
}

fn fill(
    shape: &[usize],
    max_entry: usize,
    distinct: bool,
    rows: &mut Vec<Vec<usize>>,
    j: usize,
    used: &mut u128,
    out: &mut Vec<Comt>,
) {
    if j == shape.len() {
        out.push(Comt::from_rows_unchecked(rows.clone()));
        return;
    }
    let k = rows[j].len();
    if k == shape[j] {
        fill(shape, max_entry, distinct, rows, j + 1, used, out);
        return;
    }
    let (lo, hi) = if k == 0 {
        // Later rows need strictly larger first entries.
        let lo = if j == 0 { 1 } else { rows[j - 1][0] + 1 };
        (lo, max_entry.saturating_sub(shape.len() - 1 - j))
    } else {
        (1, rows[j][k - 1])
    };
    for v in lo..=hi {
        if distinct && *used & (1 << v) != 0 {
            continue;
        }
        if k > 0 && !triple_ok(rows, j, k, v) {
            continue;
        }
        if distinct {
            *used |= 1 << v;
        }
        rows[j].push(v);
        fill(shape, max_entry, distinct, rows, j, used, out);
        rows[j].pop();
        if distinct {
            *used &= !(1 << v);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> Composition {
        s.parse().unwrap()
    }

    fn ct(rows: &[&[usize]]) -> Comt {
        Comt::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn predicate_examples() {
        assert!(is_comt(&[vec![5, 4, 3, 1], vec![6], vec![8, 7, 2]]));
        assert!(is_comt(&[vec![1], vec![3, 2]]));
        assert!(is_comt(&[vec![1], vec![3, 3]]));
        assert!(!is_comt(&[vec![2], vec![1]]));
        assert!(!is_comt(&[vec![1, 2]]));
        // (2,2) = 1 lies weakly between T(1,2) = 1 and T(1,1) = 2.
        assert!(!is_comt(&[vec![2, 1], vec![3, 1]]));
    }

    #[test]
    fn descent_examples() {
        assert_eq!(
            ct(&[&[5, 4, 3, 1], &[6], &[8, 7, 2]]).descents().unwrap(),
            BTreeSet::from([2, 5, 6])
        );
        assert_eq!(
            ct(&[&[1], &[3, 2]]).descents().unwrap(),
            BTreeSet::from([1])
        );
        assert!(ct(&[&[2, 1]]).descents().unwrap().is_empty());
        assert!(ct(&[&[1], &[3, 3]]).descents().is_err());
    }

    #[test]
    fn enumeration_examples() {
        let all = enumerate_comts(&c("(1,2)"), 3);
        let expect = vec![
            ct(&[&[1], &[2, 2]]),
            ct(&[&[1], &[3, 2]]),
            ct(&[&[1], &[3, 3]]),
            ct(&[&[2], &[3, 3]]),
        ];
        assert_eq!(all, expect);
        assert_eq!(enumerate_comts(&c("(1)"), 1).len(), 1);
        assert_eq!(enumerate_comts(&c("(1,2)"), 2), vec![ct(&[&[1], &[2, 2]])]);
        assert_eq!(
            enumerate_standard_comts(&c("(1,2)")),
            vec![ct(&[&[1], &[3, 2]])]
        );
        assert_eq!(
            enumerate_standard_comts(&c("(4)")),
            vec![ct(&[&[4, 3, 2, 1]])]
        );
        assert_eq!(enumerate_standard_comts(&c("(2,1)")).len(), 1);
    }

    #[test]
    fn enumeration_matches_brute_force() {
        // Every filling of a small shape, filtered by the predicate.
        for a in ["(2,1)", "(1,2)", "(2,2)", "(1,1,2)", "(3,1)", "(1,3)"] {
            let a = c(a);
            let cells = a.size();
            let max = 4usize;
            let mut brute = Vec::new();
            for code in 0..max.pow(cells as u32) {
                let mut x = code;
                let mut rows = Vec::new();
                for &len in a.parts() {
                    let mut row = Vec::new();
                    for _ in 0..len {
                        row.push(x % max + 1);
                        x /= max;
                    }
                    rows.push(row);
                }
                if is_comt(&rows) {
                    brute.push(Comt::from_rows_unchecked(rows));
                }
            }
            brute.sort();
            let mut got = enumerate_comts(&a, max);
            got.sort();
            assert_eq!(got, brute, "shape {a}");
        }
    }

    #[test]
    fn weights() {
        assert_eq!(ct(&[&[1], &[2, 2]]).weight().parts(), &[1, 2]);
        assert_eq!(ct(&[&[1], &[3, 3]]).weight().parts(), &[1, 0, 2]);
        assert_eq!(ct(&[&[1], &[3, 2]]).shape(), c("(1,2)"));
    }
}
