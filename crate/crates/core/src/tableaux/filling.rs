//! Augmented fillings: a basement column 0 plus rows of entries.
//!
//! Attacking cells, type A/B triples and their orientation are defined here
//! once and shared by SSAFs (identity basement) and the Macdonald-style sums.

use std::cmp::Reverse;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{weight_of, write_rows, Cell};
use crate::combinatorics::WeakComposition;
use crate::error::{Error, Result};

/// How the basement column is filled for a diagram with `n` rows.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basement {
    /// `b_i = i`
    Identity,
    /// `b_i = n - i + 1`
    Reversed,
    /// `b_i = n + 1`
    Constant,
}

impl Basement {
    pub fn entries(self, n: usize) -> Vec<usize> {
        (1..=n)
            .map(|i| match self {
                Basement::Identity => i,
                Basement::Reversed => n - i + 1,
                Basement::Constant => n + 1,
            })
            .collect()
    }
}

impl std::str::FromStr for Basement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "id" | "identity" => Ok(Basement::Identity),
            "rev" | "reversed" => Ok(Basement::Reversed),
            "const" | "constant" => Ok(Basement::Constant),
            _ => Err(Error::Parse {
                what: "basement",
                input: s.to_string(),
            }),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TripleKind {
    A,
    B,
}

/// A triple of cells. For type A, `c = (i,k-1)`, `a = (i,k)`, `b = (j,k)`;
/// for type B, `a = (i,k)`, `b = (j,k)`, `c = (j,k+1)`; always `i < j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Triple {
    pub kind: TripleKind,
    pub a: Cell,
    pub b: Cell,
    pub c: Cell,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AugmentedFilling {
    basement: Vec<usize>,
    rows: Vec<Vec<usize>>,
}

impl AugmentedFilling {
    /// One row of `rows` per basement entry; rows may be empty.
    pub fn new(basement: Basement, rows: Vec<Vec<usize>>) -> Self {
        AugmentedFilling {
            basement: basement.entries(rows.len()),
            rows,
        }
    }

    pub fn with_basement(basement: Vec<usize>, rows: Vec<Vec<usize>>) -> Result<Self> {
        if basement.len() != rows.len() {
            return Err(Error::SizeMismatch {
                expected: basement.len(),
                found: rows.len(),
            });
        }
        if rows.iter().flatten().any(|&v| v == 0) {
            return Err(Error::invalid("filling", "entries must be positive"));
        }
        Ok(AugmentedFilling { basement, rows })
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn basement(&self) -> &[usize] {
        &self.basement
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<usize>> {
        self.rows
    }

    pub fn shape(&self) -> WeakComposition {
        WeakComposition::new(self.rows.iter().map(Vec::len).collect())
    }

    pub fn row_len(&self, row: usize) -> usize {
        self.rows[row - 1].len()
    }

    /// Entry at `cell`; column 0 is the basement.
    pub fn value(&self, cell: Cell) -> Option<usize> {
        if cell.row == 0 || cell.row > self.rows.len() {
            return None;
        }
        if cell.col == 0 {
            return Some(self.basement[cell.row - 1]);
        }
        self.rows[cell.row - 1].get(cell.col - 1).copied()
    }

    fn val(&self, cell: Cell) -> usize {
        self.value(cell).expect("cell inside diagram")
    }

    /// Non-basement cells, row by row.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(r, row)| (1..=row.len()).map(move |c| Cell::new(r + 1, c)))
    }

    /// The weight, of length `n` (entries larger than `n` extend it).
    pub fn weight(&self) -> WeakComposition {
        let mut w = weight_of(self.rows.iter().flatten());
        if w.len() < self.n() {
            w.resize(self.n(), 0);
        }
        WeakComposition::new(w)
    }

    pub fn is_non_attacking(&self) -> bool {
        let width = self.rows.iter().map(Vec::len).max().unwrap_or(0);
        for k in 1..=width {
            let col: Vec<(usize, usize)> = (1..=self.n())
                .filter_map(|r| self.value(Cell::new(r, k)).map(|v| (r, v)))
                .collect();
            for (x, &(_, v)) in col.iter().enumerate() {
                if col[x + 1..].iter().any(|&(_, w)| w == v) {
                    return false;
                }
            }
            for &(r, v) in &col {
                for r2 in 1..r {
                    if self.value(Cell::new(r2, k - 1)) == Some(v) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Cells `s` (not in the basement) with `value(West(s)) < value(s)`.
    pub fn descents(&self) -> Vec<Cell> {
        self.cells()
            .filter(|&s| self.val(Cell::new(s.row, s.col - 1)) < self.val(s))
            .collect()
    }

    pub fn has_descents(&self) -> bool {
        self.cells()
            .any(|s| self.val(Cell::new(s.row, s.col - 1)) < self.val(s))
    }

    pub fn triples(&self) -> Vec<Triple> {
        let lens: Vec<usize> = self.rows.iter().map(Vec::len).collect();
        shape_triples(&lens)
    }

    pub fn is_inversion(&self, t: &Triple) -> bool {
        is_inversion_with(t, |c| self.val(c))
    }

    /// Number of triples that are not inversion triples.
    pub fn coinv(&self) -> usize {
        self.triples()
            .iter()
            .filter(|t| !self.is_inversion(t))
            .count()
    }

    /// Every triple is an inversion triple.
    pub fn all_inversions(&self) -> bool {
        self.triples().iter().all(|t| self.is_inversion(t))
    }
}

/// All type A and B triples of the augmented diagram with these row lengths.
pub(crate) fn shape_triples(lens: &[usize]) -> Vec<Triple> {
    let n = lens.len();
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            let (li, lj) = (lens[i - 1], lens[j - 1]);
            if li >= lj {
                for k in 1..=lj {
                    out.push(Triple {
                        kind: TripleKind::A,
                        a: Cell::new(i, k),
                        b: Cell::new(j, k),
                        c: Cell::new(i, k - 1),
                    });
                }
            } else {
                for k in 0..=li {
                    out.push(Triple {
                        kind: TripleKind::B,
                        a: Cell::new(i, k),
                        b: Cell::new(j, k),
                        c: Cell::new(j, k + 1),
                    });
                }
            }
        }
    }
    out
}

fn key(cell: Cell, v: usize) -> (usize, usize, Reverse<usize>) {
    (v, cell.row, Reverse(cell.col))
}

/// Orientation test shared with the incremental checks in enumeration.
pub(crate) fn is_inversion_with(t: &Triple, val: impl Fn(Cell) -> usize) -> bool {
    let ka = key(t.a, val(t.a));
    let kb = key(t.b, val(t.b));
    let kc = key(t.c, val(t.c));
    // Labels 0 = a, 1 = b, 2 = c, sorted from smallest to largest.
    let mut order = [(ka, 0u8), (kb, 1u8), (kc, 2u8)];
    order.sort();
    let o = [order[0].1, order[1].1, order[2].1];
    // The cyclic rotations of the inverting orientation.
    let cycle: [u8; 3] = match t.kind {
        TripleKind::A => [2, 1, 0], // c, b, a: counter-clockwise
        TripleKind::B => [0, 2, 1], // a, c, b: clockwise
    };
    (0..3).any(|r| (0..3).all(|x| o[x] == cycle[(x + r) % 3]))
}

impl fmt::Display for AugmentedFilling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bw = self
            .basement
            .iter()
            .map(|v| v.to_string().len())
            .max()
            .unwrap_or(1);
        write_rows(f, &self.rows, |r| format!("[{:>bw$}] ", self.basement[r]))
    }
}
