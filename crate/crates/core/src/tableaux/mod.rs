//! Tableau objects: reverse tableaux, composition tableaux (ComTs) and
//! augmented fillings, with the maps between them.
//!
//! Cells are addressed 1-indexed as `(row, col)` with rows counted from the
//! top. In augmented diagrams the basement is column 0.

mod comt;
mod filling;
mod reverse;
mod ssaf;

pub use comt::{comt_descents, enumerate_comts, enumerate_standard_comts, is_comt, Comt};
pub(crate) use filling::{is_inversion_with, shape_triples};
pub use filling::{AugmentedFilling, Basement, Triple, TripleKind};
pub use reverse::{
    enumerate_reversetableaux, enumerate_standard_reversetableaux, is_reversetableau,
    ReverseTableau,
};
pub use ssaf::{comt_to_ssaf, enumerate_ssafs, is_ssaf, rho, rho_inverse, ssaf_to_comt, Ssaf};

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::combinatorics::Partition;
use crate::error::{Error, Result};

/// A cell position, `(row, col)`, both 1-indexed (column 0 is a basement).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// The skew diagram `outer / inner`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::invalid(
                "skew shape",
                format!("{inner} is not contained in {outer}"),
            ));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(shape: Partition) -> Self {
        SkewShape {
            outer: shape,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// Number of cells in row `i` (1-indexed).
    pub fn row_len(&self, i: usize) -> usize {
        self.outer.part(i - 1) - self.inner.part(i - 1)
    }

    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        for (r, &len) in self.outer.parts().iter().enumerate() {
            for col in self.inner.part(r) + 1..=len {
                out.push(Cell::new(r + 1, col));
            }
        }
        out
    }

    /// No two cells share a column.
    pub fn is_horizontal_strip(&self) -> bool {
        let cols: Vec<usize> = self.cells().iter().map(|c| c.col).collect();
        let distinct: BTreeSet<usize> = cols.iter().copied().collect();
        distinct.len() == cols.len()
    }

    /// No two cells share a row.
    pub fn is_vertical_strip(&self) -> bool {
        (1..=self.outer.len()).all(|r| self.row_len(r) <= 1)
    }

    /// The column indices of the cells, with multiplicity, ascending.
    pub fn columns(&self) -> Vec<usize> {
        let mut cols: Vec<usize> = self.cells().iter().map(|c| c.col).collect();
        cols.sort_unstable();
        cols
    }
}

pub fn horizontal_strip(shape: &SkewShape) -> bool {
    shape.is_horizontal_strip()
}

pub fn vertical_strip(shape: &SkewShape) -> bool {
    shape.is_vertical_strip()
}

/// The set of `i` for which `i + 1` does not sit strictly left of `i`.
///
/// `positions[v - 1]` is the cell holding `v`.
pub(crate) fn descent_set(positions: &[Cell]) -> BTreeSet<usize> {
    (1..positions.len())
        .filter(|&i| positions[i].col >= positions[i - 1].col)
        .collect()
}

/// Cell positions of `1..=n` in a row-based filling, or an error when the
/// entries are not exactly `1..=n` once each.
pub(crate) fn standard_positions(rows: &[Vec<usize>], col_offset: &[usize]) -> Result<Vec<Cell>> {
    let n: usize = rows.iter().map(Vec::len).sum();
    let mut pos: Vec<Option<Cell>> = vec![None; n];
    for (r, row) in rows.iter().enumerate() {
        let off = col_offset.get(r).copied().unwrap_or(0);
        for (c, &v) in row.iter().enumerate() {
            if v == 0 || v > n || pos[v - 1].is_some() {
                return Err(Error::NotStandard);
            }
            pos[v - 1] = Some(Cell::new(r + 1, off + c + 1));
        }
    }
    Ok(pos
        .into_iter()
        .map(|c| c.expect("all values placed"))
        .collect())
}

pub(crate) fn weight_of<'a>(entries: impl Iterator<Item = &'a usize>) -> Vec<usize> {
    let mut w: Vec<usize> = Vec::new();
    for &v in entries {
        if v > w.len() {
            w.resize(v, 0);
        }
        w[v - 1] += 1;
    }
    w
}

pub(crate) fn write_rows(
    f: &mut fmt::Formatter<'_>,
    rows: &[Vec<usize>],
    prefix: impl Fn(usize) -> String,
) -> fmt::Result {
    let width = rows
        .iter()
        .flatten()
        .map(|v| v.to_string().len())
        .max()
        .unwrap_or(1);
    for (r, row) in rows.iter().enumerate() {
        if r > 0 {
            writeln!(f)?;
        }
        write!(f, "{}", prefix(r))?;
        let cells: Vec<String> = row.iter().map(|v| format!("{v:>width$}")).collect();
        write!(f, "{}", cells.join(" ").trim_end())?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn strip_examples() {
        let lam = p("(4,3,2,2)");
        let mu = SkewShape::new(lam.clone(), p("(3,2,2)")).unwrap();
        assert!(horizontal_strip(&mu));
        assert!(!vertical_strip(&mu));
        let rho = SkewShape::new(lam.clone(), p("(4,2,1,1)")).unwrap();
        assert!(vertical_strip(&rho));
        assert!(!horizontal_strip(&rho));
        let empty = SkewShape::new(lam.clone(), lam.clone()).unwrap();
        assert!(horizontal_strip(&empty) && vertical_strip(&empty));
        assert_eq!(mu.columns(), vec![1, 2, 3, 4]);
        assert!(SkewShape::new(p("(2)"), p("(1,1)")).is_err());
    }
}
