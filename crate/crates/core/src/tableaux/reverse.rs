use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{descent_set, standard_positions, weight_of, write_rows, Cell, SkewShape};
use crate::combinatorics::{Partition, WeakComposition};
use crate::error::{Error, Result};

/// Rows weakly decrease, columns strictly decrease downward.
///
/// For a skew shape `outer / inner`, `rows[i]` holds the entries of the cells
/// of row `i + 1` right of the inner shape.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RtRepr", into = "RtRepr")]
pub struct ReverseTableau {
    inner: Partition,
    rows: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct RtRepr {
    shape: Vec<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    inner: Vec<usize>,
    rows: Vec<Vec<usize>>,
}

impl TryFrom<RtRepr> for ReverseTableau {
    type Error = Error;

    fn try_from(r: RtRepr) -> Result<Self> {
        let t = ReverseTableau::skew(Partition::new(r.inner)?, r.rows)?;
        if t.shape().parts() != r.shape.as_slice() {
            return Err(Error::invalid(
                "reversetableau",
                "shape field disagrees with rows",
            ));
        }
        Ok(t)
    }
}

impl From<ReverseTableau> for RtRepr {
    fn from(t: ReverseTableau) -> Self {
        RtRepr {
            shape: t.shape().parts().to_vec(),
            inner: t.inner.parts().to_vec(),
            rows: t.rows,
        }
    }
}

/// Checks the two reversetableau rules on `rows` laid out over `shape`.
pub fn is_reversetableau(shape: &SkewShape, rows: &[Vec<usize>]) -> Result<bool> {
    let outer = shape.outer();
    if rows.len() != outer.len() {
        return Err(Error::SizeMismatch {
            expected: outer.len(),
            found: rows.len(),
        });
    }
    for (r, row) in rows.iter().enumerate() {
        if row.len() != shape.row_len(r + 1) {
            return Err(Error::SizeMismatch {
                expected: shape.row_len(r + 1),
                found: row.len(),
            });
        }
    }
    Ok(rules_hold(shape.inner(), rows))
}

fn rules_hold(inner: &Partition, rows: &[Vec<usize>]) -> bool {
    if rows.iter().flatten().any(|&v| v == 0) {
        return false;
    }
    if rows.iter().any(|row| row.windows(2).any(|w| w[0] < w[1])) {
        return false;
    }
    for r in 1..rows.len() {
        for (c, &v) in rows[r].iter().enumerate() {
            let col = inner.part(r) + c;
            if let Some(above) = col
                .checked_sub(inner.part(r - 1))
                .and_then(|x| rows[r - 1].get(x))
            {
                if *above <= v {
                    return false;
                }
            }
        }
    }
    true
}

impl ReverseTableau {
    pub fn empty() -> Self {
        ReverseTableau {
            inner: Partition::empty(),
            rows: Vec::new(),
        }
    }

    /// A straight-shape reversetableau.
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        Self::skew(Partition::empty(), rows)
    }

    pub fn skew(inner: Partition, mut rows: Vec<Vec<usize>>) -> Result<Self> {
        while rows.len() > inner.len() && rows.last().is_some_and(Vec::is_empty) {
            rows.pop();
        }
        let mut outer: Vec<usize> = (0..rows.len().max(inner.len()))
            .map(|r| inner.part(r) + rows.get(r).map_or(0, Vec::len))
            .collect();
        while outer.last() == Some(&0) {
            outer.pop();
        }
        let outer = Partition::new(outer)
            .ok()
            .filter(|p| p.len() >= inner.len() && p.contains(&inner))
            .ok_or_else(|| Error::invalid("reversetableau", "rows do not form a skew shape"))?;
        rows.resize(outer.len(), Vec::new());
        if !rules_hold(&inner, &rows) {
            return Err(Error::invalid(
                "reversetableau",
                "rows must weakly decrease and columns strictly decrease",
            ));
        }
        Ok(ReverseTableau { inner, rows })
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<usize>>) -> Self {
        debug_assert!(rules_hold(&Partition::empty(), &rows));
        ReverseTableau {
            inner: Partition::empty(),
            rows,
        }
    }

    /// The outer shape.
    pub fn shape(&self) -> Partition {
        Partition::from_unsorted(
            (0..self.rows.len()).map(|r| self.inner.part(r) + self.rows[r].len()),
        )
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn skew_shape(&self) -> SkewShape {
        SkewShape::new(self.shape(), self.inner.clone()).expect("inner fits")
    }

    pub fn is_skew(&self) -> bool {
        !self.inner.is_empty()
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    /// Entry in cell `(row, col)`, 1-indexed.
    pub fn entry(&self, row: usize, col: usize) -> Option<usize> {
        let off = self.inner.part(row.checked_sub(1)?);
        self.rows
            .get(row - 1)?
            .get(col.checked_sub(off + 1)?)
            .copied()
    }

    pub fn max_entry(&self) -> usize {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    pub fn weight(&self) -> WeakComposition {
        WeakComposition::new(weight_of(self.rows.iter().flatten()))
    }

    pub fn is_standard(&self) -> bool {
        standard_positions(&self.rows, self.inner.parts()).is_ok()
    }

    /// `D(T)`: the `i` such that `i + 1` is not strictly left of `i`.
    pub fn descents(&self) -> Result<BTreeSet<usize>> {
        Ok(descent_set(&standard_positions(
            &self.rows,
            self.inner.parts(),
        )?))
    }

    /// Columns of a straight-shape tableau, each read top to bottom.
    pub fn columns(&self) -> Vec<Vec<usize>> {
        let width = self.rows.first().map_or(0, Vec::len);
        (0..width)
            .map(|c| self.rows.iter().filter_map(|r| r.get(c).copied()).collect())
            .collect()
    }

    /// Relabels each value class right to left, smallest values first.
    pub fn standardize(&self) -> ReverseTableau {
        let mut cells: Vec<(usize, std::cmp::Reverse<usize>, usize, usize)> = Vec::new();
        for (r, row) in self.rows.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                cells.push((v, std::cmp::Reverse(self.inner.part(r) + c), r, c));
            }
        }
        cells.sort();
        let mut rows = self.rows.clone();
        for (label, &(_, _, r, c)) in cells.iter().enumerate() {
            rows[r][c] = label + 1;
        }
        ReverseTableau {
            inner: self.inner.clone(),
            rows,
        }
    }

    /// Cell holding each value of a standard tableau.
    pub fn positions(&self) -> Result<Vec<Cell>> {
        standard_positions(&self.rows, self.inner.parts())
    }
}

impl fmt::Display for ReverseTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() && !self.is_skew() {
            return write!(f, "()");
        }
        write_rows(f, &self.rows, |r| ". ".repeat(self.inner.part(r)))
    }
}

/// All reversetableaux of straight shape `shape` with entries in `1..=max_entry`.
pub fn enumerate_reversetableaux(shape: &Partition, max_entry: usize) -> Vec<ReverseTableau> {
    let mut out = Vec::new();
    let mut rows: Vec<Vec<usize>> = shape
        .parts()
        .iter()
        .map(|&l| Vec::with_capacity(l))
        .collect();
    fill(shape, max_entry, false, &mut rows, 0, &mut 0u64, &mut out);
    out
}

/// The reversetableaux of shape `shape` using each of `1..=|shape|` once.
pub fn enumerate_standard_reversetableaux(shape: &Partition) -> Vec<ReverseTableau> {
    let mut out = Vec::new();
    let mut rows: Vec<Vec<usize>> = shape
        .parts()
        .iter()
        .map(|&l| Vec::with_capacity(l))
        .collect();
    fill(shape, shape.size(), true, &mut rows, 0, &mut 0u64, &mut out);
    out
}

fn fill(
    shape: &Partition,
    max_entry: usize,
    distinct: bool,
    rows: &mut Vec<Vec<usize>>,
    r: usize,
    used: &mut u64,
    out: &mut Vec<ReverseTableau>,
) {
    if r == shape.len() {
        out.push(ReverseTableau::from_rows_unchecked(rows.clone()));
        return;
    }
    let c = rows[r].len();
    if c == shape.part(r) {
        fill(shape, max_entry, distinct, rows, r + 1, used, out);
        return;
    }
    let mut hi = rows[r].last().copied().unwrap_or(max_entry);
    if r > 0 {
        hi = hi.min(rows[r - 1][c] - 1);
    }
    // Cells below in this column need room for strictly smaller entries.
    let below = shape.conjugate().part(c) - r - 1;
    for v in (below + 1..=hi).rev() {
        if distinct && *used & (1 << v) != 0 {
            continue;
        }
        if distinct {
            *used |= 1 << v;
        }
        rows[r].push(v);
        fill(shape, max_entry, distinct, rows, r, used, out);
        rows[r].pop();
        if distinct {
            *used &= !(1 << v);
        }
    }
}
