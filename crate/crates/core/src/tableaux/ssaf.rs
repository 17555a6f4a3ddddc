use std::fmt;

use serde::{Deserialize, Serialize};

use super::filling::{is_inversion_with, AugmentedFilling, Basement, Triple, TripleKind};
use super::{write_rows, Cell, Comt, ReverseTableau};
use crate::combinatorics::WeakComposition;
use crate::error::{Error, Result};

/// A semistandard augmented filling with basement `1..=n` (not stored).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "SsafRepr", into = "SsafRepr")]
pub struct Ssaf {
    rows: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct SsafRepr {
    shape: Vec<usize>,
    rows: Vec<Vec<usize>>,
}

impl TryFrom<SsafRepr> for Ssaf {
    type Error = Error;

    fn try_from(r: SsafRepr) -> Result<Self> {
        let f = Ssaf::new(r.rows)?;
        if f.shape().parts() != r.shape.as_slice() {
            return Err(Error::invalid("SSAF", "shape field disagrees with rows"));
        }
        Ok(f)
    }
}

impl From<Ssaf> for SsafRepr {
    fn from(f: Ssaf) -> Self {
        SsafRepr {
            shape: f.shape().parts().to_vec(),
            rows: f.rows,
        }
    }
}

pub fn is_ssaf(rows: &[Vec<usize>]) -> bool {
    if rows.iter().flatten().any(|&v| v == 0) {
        return false;
    }
    let f = AugmentedFilling::new(Basement::Identity, rows.to_vec());
    !f.has_descents() && f.is_non_attacking() && f.all_inversions()
}

impl Ssaf {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        if !is_ssaf(&rows) {
            return Err(Error::invalid(
                "SSAF",
                "filling has a descent, an attacking pair or a coinversion triple",
            ));
        }
        Ok(Ssaf { rows })
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<usize>>) -> Self {
        debug_assert!(is_ssaf(&rows), "not an SSAF: {rows:?}");
        Ssaf { rows }
    }

    /// Number of rows (and basement entries).
    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> WeakComposition {
        WeakComposition::new(self.rows.iter().map(Vec::len).collect())
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Weight with exactly `n` parts; the basement is not counted.
    pub fn weight(&self) -> WeakComposition {
        self.to_filling().weight()
    }

    pub fn to_filling(&self) -> AugmentedFilling {
        AugmentedFilling::new(Basement::Identity, self.rows.clone())
    }

    /// The same filling with zero rows appended so that it has `n` rows.
    pub fn padded(&self, n: usize) -> Result<Ssaf> {
        if n < self.n() {
            return Err(Error::TooFewPositions {
                needed: self.n(),
                available: n,
            });
        }
        let mut rows = self.rows.clone();
        rows.resize(n, Vec::new());
        Ok(Ssaf { rows })
    }
}

impl fmt::Display for Ssaf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return write!(f, "()");
        }
        let w = self.n().to_string().len();
        write_rows(f, &self.rows, |r| format!("[{:>w$}] ", r + 1))
    }
}

/// Places each row of `t` beside the basement entry equal to its first entry.
pub fn comt_to_ssaf(t: &Comt) -> Ssaf {
    let mut rows = vec![Vec::new(); t.max_entry()];
    for row in t.rows() {
        rows[row[0] - 1] = row.clone();
    }
    Ssaf::from_rows_unchecked(rows)
}

/// Deletes the basement and the empty rows.
pub fn ssaf_to_comt(f: &Ssaf) -> Comt {
    Comt::from_rows_unchecked(f.rows.iter().filter(|r| !r.is_empty()).cloned().collect())
}

/// Builds the SSAF column by column: each entry of column `k` of `t`, top to
/// bottom, goes to the uppermost row where it extends the row without a
/// descent.
pub fn rho_inverse(t: &ReverseTableau) -> Ssaf {
    let n = t.max_entry();
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (k, col) in t.columns().iter().enumerate() {
        for &e in col {
            let i = (0..n)
                .find(|&i| rows[i].len() == k && (if k == 0 { i + 1 } else { rows[i][k - 1] }) >= e)
                .expect("a reversetableau column always finds a row");
            rows[i].push(e);
        }
    }
    Ssaf::from_rows_unchecked(rows)
}

/// Sorts each column of `f` decreasingly and stacks them into a tableau.
pub fn rho(f: &Ssaf) -> ReverseTableau {
    let width = f.rows.iter().map(Vec::len).max().unwrap_or(0);
    let cols: Vec<Vec<usize>> = (0..width)
        .map(|k| {
            let mut c: Vec<usize> = f.rows.iter().filter_map(|r| r.get(k).copied()).collect();
            c.sort_unstable_by(|a, b| b.cmp(a));
            c
        })
        .collect();
    let height = cols.first().map_or(0, Vec::len);
    let rows = (0..height)
        .map(|r| cols.iter().filter_map(|c| c.get(r).copied()).collect())
        .collect();
    ReverseTableau::from_rows_unchecked(rows)
}

/// All SSAFs of shape `g` (basement `1..=g.len()`).
pub fn enumerate_ssafs(g: &WeakComposition) -> Vec<Ssaf> {
    let shape = g.parts();
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); shape.len()];
    let mut out = Vec::new();
    fill(shape, &mut rows, 0, &mut out);
    out
}

fn fill(shape: &[usize], rows: &mut Vec<Vec<usize>>, j: usize, out: &mut Vec<Ssaf>) {
    if j == shape.len() {
        out.push(Ssaf::from_rows_unchecked(rows.clone()));
        return;
    }
    let k = rows[j].len();
    if k == shape[j] {
        fill(shape, rows, j + 1, out);
        return;
    }
    let west = if k == 0 { j + 1 } else { rows[j][k - 1] };
    for v in 1..=west {
        if placement_ok(shape, rows, j, k, v) {
            rows[j].push(v);
            fill(shape, rows, j, out);
            rows[j].pop();
        }
    }
}

/// Attack and triple checks for placing `v` at 0-indexed `(j, k)` once every
/// earlier cell in row-major order is filled.
fn placement_ok(shape: &[usize], rows: &[Vec<usize>], j: usize, k: usize, v: usize) -> bool {
    let at = |r: usize, c: usize| -> usize {
        if c == 0 {
            r
        } else if r == j + 1 && c == k + 1 {
            v
        } else {
            rows[r - 1][c - 1]
        }
    };
    let (row, col) = (j + 1, k + 1);
    for i in 1..row {
        if rows[i - 1].get(k) == Some(&v) {
            return false;
        }
        let left = if k == 0 {
            Some(i)
        } else {
            rows[i - 1].get(k - 1).copied()
        };
        if left == Some(v) {
            return false;
        }
        let t = if shape[i - 1] >= shape[j] {
            Triple {
                kind: TripleKind::A,
                a: Cell::new(i, col),
                b: Cell::new(row, col),
                c: Cell::new(i, col - 1),
            }
        } else if col - 1 <= shape[i - 1] {
            Triple {
                kind: TripleKind::B,
                a: Cell::new(i, col - 1),
                b: Cell::new(row, col - 1),
                c: Cell::new(row, col),
            }
        } else {
            continue;
        };
        if !is_inversion_with(&t, |c| at(c.row, c.col)) {
            return false;
        }
    }
    true
}
