//! Schensted insertion into reversetableaux and skyline insertion into ComTs.

use serde::Serialize;

use crate::combinatorics::Composition;
use crate::error::{Error, Result};
use crate::tableaux::{
    comt_to_ssaf, rho, rho_inverse, ssaf_to_comt, Cell, Comt, ReverseTableau, Ssaf,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InsertionResult<T> {
    pub result: T,
    /// Cells whose value changed, in the order visited, ending at `new_cell`.
    pub path: Vec<Cell>,
    pub new_cell: Cell,
    /// Row of `new_cell` in `result`.
    pub augmented_row: usize,
}

/// `T <- k` for a straight-shape reversetableau.
pub fn schensted_insert(t: &ReverseTableau, k: usize) -> InsertionResult<ReverseTableau> {
    assert!(k > 0, "entries are positive");
    debug_assert!(!t.is_skew());
    let mut rows = t.rows().to_vec();
    let mut k = k;
    let mut path = Vec::new();
    let mut r = 0;
    loop {
        if r == rows.len() {
            rows.push(Vec::new());
        }
        let row = &mut rows[r];
        match row.last() {
            Some(&last) if k > last => {
                let c = row
                    .iter()
                    .position(|&x| x < k)
                    .expect("last entry is smaller");
                std::mem::swap(&mut row[c], &mut k);
                path.push(Cell::new(r + 1, c + 1));
                r += 1;
            }
            _ => {
                row.push(k);
                let new_cell = Cell::new(r + 1, row.len());
                path.push(new_cell);
                return InsertionResult {
                    result: ReverseTableau::from_rows_unchecked(rows),
                    path,
                    new_cell,
                    augmented_row: r + 1,
                };
            }
        }
    }
}

/// Removes the cell at the end of row `row` (which must be a corner) and
/// reverse-bumps up to row 1. Returns the smaller tableau and the value that
/// leaves the first row.
pub fn schensted_uninsert(t: &ReverseTableau, row: usize) -> Result<(ReverseTableau, usize)> {
    let mut rows = t.rows().to_vec();
    let len = rows.get(row.wrapping_sub(1)).map_or(0, Vec::len);
    if len == 0 || rows.get(row).is_some_and(|below| below.len() == len) {
        return Err(Error::invalid(
            "corner",
            format!("row {row} does not end in a corner"),
        ));
    }
    let mut y = rows[row - 1].pop().expect("nonempty");
    if rows[row - 1].is_empty() {
        rows.pop();
    }
    for r in (0..row - 1).rev() {
        let c = rows[r]
            .iter()
            .rposition(|&x| x > y)
            .expect("the cell above is larger");
        std::mem::swap(&mut rows[r][c], &mut y);
    }
    Ok((ReverseTableau::from_rows_unchecked(rows), y))
}

/// Entries read left to right, rows from bottom to top.
pub fn row_reading_word(t: &ReverseTableau) -> Vec<usize> {
    t.rows().iter().rev().flatten().copied().collect()
}

/// `T . U`: insert the row reading word of `U` into `T`.
pub fn plactic_product(t: &ReverseTableau, u: &ReverseTableau) -> ReverseTableau {
    row_reading_word(u)
        .into_iter()
        .fold(t.clone(), |acc, w| schensted_insert(&acc, w).result)
}

/// `k -> F`.
pub fn skyline_insert(f: &Comt, k: usize) -> InsertionResult<Comt> {
    assert!(k > 0, "entries are positive");
    let mut rows = f.rows().to_vec();
    let r = rows.iter().map(Vec::len).max().unwrap_or(0);
    let mut k = k;
    // Path cells as (input row index, column).
    let mut path: Vec<(usize, usize)> = Vec::new();
    for j in (2..=r + 1).rev() {
        for i in 0..rows.len() {
            let len = rows[i].len();
            if len == j - 1 {
                if k <= rows[i][j - 2] {
                    rows[i].push(k);
                    path.push((i, j));
                    let path: Vec<Cell> = path.iter().map(|&(i, c)| Cell::new(i + 1, c)).collect();
                    return InsertionResult {
                        result: Comt::from_rows_unchecked(rows),
                        new_cell: *path.last().expect("nonempty"),
                        path,
                        augmented_row: i + 1,
                    };
                }
            } else if len >= j {
                let k2 = rows[i][j - 1];
                if k2 < k && k <= rows[i][j - 2] {
                    rows[i][j - 1] = k;
                    k = k2;
                    path.push((i, j));
                }
            }
        }
    }
    // Whatever reaches column 1 starts a new row.
    let pos = rows.partition_point(|row| row[0] < k);
    assert!(
        pos == rows.len() || rows[pos][0] != k,
        "value {k} bumped into column 1 twice"
    );
    rows.insert(pos, vec![k]);
    let mut cells: Vec<Cell> = path
        .iter()
        .map(|&(i, c)| Cell::new(if i >= pos { i + 2 } else { i + 1 }, c))
        .collect();
    let new_cell = Cell::new(pos + 1, 1);
    cells.push(new_cell);
    InsertionResult {
        result: Comt::from_rows_unchecked(rows),
        path: cells,
        new_cell,
        augmented_row: pos + 1,
    }
}

/// Skyline insertion on the SSAF form; the result keeps at least `f.n()` rows.
pub fn skyline_insert_ssaf(f: &Ssaf, k: usize) -> Ssaf {
    let out = comt_to_ssaf(&skyline_insert(&ssaf_to_comt(f), k).result);
    if out.n() < f.n() {
        out.padded(f.n()).expect("padding grows")
    } else {
        out
    }
}

/// The ComT analogue of `rho`: the reversetableau with the same columns.
pub fn comt_rho(f: &Comt) -> ReverseTableau {
    rho(&comt_to_ssaf(f))
}

/// The ComT analogue of `rho_inverse`.
pub fn comt_rho_inverse(t: &ReverseTableau) -> Comt {
    ssaf_to_comt(&rho_inverse(t))
}

/// Undoes a skyline insertion whose new cell ended a row of length `l`.
///
/// Skyline and Schensted insertion commute through `rho`, and the new cell of
/// a Schensted insertion that lengthens column `l` is the bottom cell of that
/// column, so the inverse is reverse bumping there.
pub fn skyline_uninsert(f: &Comt, l: usize) -> Result<(Comt, usize)> {
    if l == 0 || !f.rows().iter().any(|r| r.len() == l) {
        return Err(Error::NoRowOfLength(l));
    }
    let t = comt_rho(f);
    let h = t.rows().iter().filter(|r| r.len() >= l).count();
    let (smaller, k) = schensted_uninsert(&t, h)?;
    let g = comt_rho_inverse(&smaller);
    debug_assert_eq!(skyline_insert(&g, k).result, *f);
    Ok((g, k))
}

/// The standard reversetableau of shape `lambda(a)` with descent composition `a`.
pub fn t_alpha(a: &Composition) -> ReverseTableau {
    // Rows of the reversed composition, top to bottom; the bottom row holds
    // the smallest values.
    let mut next = a.size();
    let mut array: Vec<Vec<usize>> = Vec::new();
    for &part in a.parts().iter().rev() {
        array.push((next + 1 - part..=next).rev().collect());
        next -= part;
    }
    let width = a.max_part();
    let cols: Vec<Vec<usize>> = (0..width)
        .map(|c| array.iter().filter_map(|r| r.get(c).copied()).collect())
        .collect();
    let height = cols.first().map_or(0, Vec::len);
    let rows = (0..height)
        .map(|r| cols.iter().filter_map(|c| c.get(r).copied()).collect())
        .collect();
    ReverseTableau::from_rows_unchecked(rows)
}

/// `rho(k -> F) == rho(F) <- k`.
pub fn commutation_check(f: &Comt, k: usize) -> bool {
    comt_rho(&skyline_insert(f, k).result) == schensted_insert(&comt_rho(f), k).result
}

/// Both clauses of the row bumping lemma for `(T <- x) <- x2`.
pub fn row_bumping_check(t: &ReverseTableau, x: usize, x2: usize) -> bool {
    let first = schensted_insert(t, x);
    let second = schensted_insert(&first.result, x2);
    let (r1, b1) = (&first.path, first.new_cell);
    let (r2, b2) = (&second.path, second.new_cell);
    if x >= x2 {
        r2.len() <= r1.len()
            && r2.iter().zip(r1.iter()).all(|(c2, c1)| c1.col < c2.col)
            && b1.col < b2.col
            && b1.row >= b2.row
    } else {
        r2.len() > r1.len()
            && r2.iter().zip(r1.iter()).all(|(c2, c1)| c2.col <= c1.col)
            && b2.col <= b1.col
            && b2.row > b1.row
    }
}

/// No row below the augmented row has the augmented row's length.
pub fn augmented_row_uniqueness_check(d: &Comt, k: usize) -> bool {
    let ins = skyline_insert(d, k);
    let rows = ins.result.rows();
    let len = rows[ins.augmented_row - 1].len();
    rows[ins.augmented_row..].iter().all(|r| r.len() != len)
}
