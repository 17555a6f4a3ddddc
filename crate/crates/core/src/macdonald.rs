//! Arm/leg statistics, non-attacking fillings over a chosen basement, and the
//! (q,t)-weighted sums built from them: integral forms of nonsymmetric
//! Macdonald polynomials, nonsymmetric and quasisymmetric Hall-Littlewood
//! polynomials, and the fundamental expansion of `J_mu`.
//!
//! Rows are numbered from the top. Column 0 is the basement.

#![allow(non_snake_case)]

use std::collections::{BTreeSet, HashMap};

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::combinatorics::{
    composition_of, expand_to_weak, Composition, Partition, WeakComposition,
};
use crate::error::{Error, Result};
use crate::poly::{QtPoly, XPoly};
use crate::qsym::{xpoly_to_M, Basis, QSymExpr};
use crate::tableaux::{is_inversion_with, shape_triples, AugmentedFilling, Basement, Cell, Triple};

fn check_cell(g: &WeakComposition, s: Cell) -> Result<()> {
    let inside = s.row >= 1 && s.row <= g.len() && s.col >= 1 && s.col <= g.parts()[s.row - 1];
    if inside {
        Ok(())
    } else {
        Err(Error::invalid("cell", format!("{s} is not a cell of {g}")))
    }
}

/// Cells to the right of `s` in its row.
pub fn leg(g: &WeakComposition, s: Cell) -> Result<usize> {
    check_cell(g, s)?;
    Ok(g.parts()[s.row - 1] - s.col)
}

/// Cells below `s` in its column in rows not longer than `row(s)`, plus cells
/// of the column to the left (basement included) in rows above `s` that are
/// strictly shorter than `row(s)`.
pub fn arm(g: &WeakComposition, s: Cell) -> Result<usize> {
    check_cell(g, s)?;
    let p = g.parts();
    let len = p[s.row - 1];
    let below = p[s.row..]
        .iter()
        .filter(|&&l| l >= s.col && l <= len)
        .count();
    let left = p[..s.row - 1]
        .iter()
        .filter(|&&l| l + 1 >= s.col && l < len)
        .count();
    Ok(below + left)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellStats {
    pub cell: Cell,
    pub arm: usize,
    pub leg: usize,
}

/// Arm and leg of every cell, row by row.
pub fn cell_stats(g: &WeakComposition) -> Vec<CellStats> {
    g.parts()
        .iter()
        .enumerate()
        .flat_map(|(r, &l)| (1..=l).map(move |c| Cell::new(r + 1, c)))
        .map(|cell| CellStats {
            cell,
            arm: arm(g, cell).expect("cell of g"),
            leg: leg(g, cell).expect("cell of g"),
        })
        .collect()
}

/// Order in which cells are filled during enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FillingOrder {
    RowMajor,
    ColumnMajor,
}

struct Filler<'a, F: FnMut(&[Vec<usize>])> {
    basement: &'a [usize],
    rows: Vec<Vec<usize>>,
    order: Vec<Cell>,
    max: usize,
    descentless: bool,
    visit: F,
}

impl<F: FnMut(&[Vec<usize>])> Filler<'_, F> {
    // 0 marks an empty cell or one outside the diagram.
    fn at(&self, r: usize, k: usize) -> usize {
        if k == 0 {
            self.basement[r - 1]
        } else {
            self.rows[r - 1].get(k - 1).copied().unwrap_or(0)
        }
    }

    fn ok(&self, r: usize, k: usize, v: usize) -> bool {
        let n = self.rows.len();
        if self.descentless && v > self.at(r, k - 1) {
            return false;
        }
        (1..=n).all(|r2| r2 == r || self.at(r2, k) != v)
            && (1..r).all(|r2| self.at(r2, k - 1) != v)
            && (r + 1..=n).all(|r2| self.at(r2, k + 1) != v)
    }

    fn run(&mut self, idx: usize) {
        if idx == self.order.len() {
            (self.visit)(&self.rows);
            return;
        }
        let Cell { row, col } = self.order[idx];
        for v in 1..=self.max {
            if self.ok(row, col, v) {
                self.rows[row - 1][col - 1] = v;
                self.run(idx + 1);
                self.rows[row - 1][col - 1] = 0;
            }
        }
    }
}

/// Calls `visit` on every non-attacking filling of `g` with entries in
/// `1..=max` over the given basement column.
pub fn for_each_filling(
    g: &WeakComposition,
    basement: &[usize],
    max: usize,
    order: FillingOrder,
    descentless: bool,
    visit: impl FnMut(&[Vec<usize>]),
) {
    assert_eq!(g.len(), basement.len(), "one basement entry per row");
    let p = g.parts();
    let mut cells: Vec<Cell> = p
        .iter()
        .enumerate()
        .flat_map(|(r, &l)| (1..=l).map(move |c| Cell::new(r + 1, c)))
        .collect();
    if order == FillingOrder::ColumnMajor {
        cells.sort_by_key(|c| (c.col, c.row));
    }
    let mut filler = Filler {
        basement,
        rows: p.iter().map(|&l| vec![0; l]).collect(),
        order: cells,
        max,
        descentless,
        visit,
    };
    filler.run(0);
}

fn check_len(g: &WeakComposition, n: usize) -> Result<()> {
    if g.len() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            found: g.len(),
        });
    }
    Ok(())
}

pub fn enumerate_fillings_ordered(
    g: &WeakComposition,
    basement: Basement,
    n: usize,
    order: FillingOrder,
) -> Result<Vec<AugmentedFilling>> {
    check_len(g, n)?;
    let b = basement.entries(n);
    let mut out = Vec::new();
    for_each_filling(g, &b, n, order, false, |rows| {
        out.push(AugmentedFilling::new(basement, rows.to_vec()));
    });
    Ok(out)
}

/// All non-attacking fillings of `g` with entries in `1..=n`, descents allowed.
pub fn enumerate_fillings(
    g: &WeakComposition,
    basement: Basement,
    n: usize,
) -> Result<Vec<AugmentedFilling>> {
    enumerate_fillings_ordered(g, basement, n, FillingOrder::RowMajor)
}

/// Sum of `leg(s) + 1` over descents `s`.
pub fn maj(tau: &AugmentedFilling) -> usize {
    tau.descents()
        .into_iter()
        .map(|s| tau.row_len(s.row) - s.col + 1)
        .sum()
}

/// Number of triples that are not inversion triples.
pub fn coinv(tau: &AugmentedFilling) -> usize {
    tau.coinv()
}

/// Shape data shared by every filling of one diagram.
struct Diagram {
    stats: Vec<CellStats>,
    triples: Vec<Triple>,
}

impl Diagram {
    fn new(g: &WeakComposition) -> Self {
        Diagram {
            stats: cell_stats(g),
            triples: shape_triples(g.parts()),
        }
    }
}

fn value(basement: &[usize], rows: &[Vec<usize>], c: Cell) -> usize {
    if c.col == 0 {
        basement[c.row - 1]
    } else {
        rows[c.row - 1][c.col - 1]
    }
}

fn exponents(rows: &[Vec<usize>], n: usize) -> Vec<u32> {
    let mut e = vec![0u32; n];
    for &v in rows.iter().flatten() {
        e[v - 1] += 1;
    }
    e
}

fn coinv_of(d: &Diagram, basement: &[usize], rows: &[Vec<usize>]) -> u32 {
    d.triples
        .iter()
        .filter(|t| !is_inversion_with(t, |c| value(basement, rows, c)))
        .count() as u32
}

/// The full combinatorial sum over non-attacking fillings of `shape`:
/// `x^tau q^maj t^coinv` times `1 - q^(leg+1) t^(arm+1)` for each cell equal
/// to its West neighbour and `1 - t` for every other cell.
fn master_sum(shape: &WeakComposition, basement: &[usize], n: usize) -> XPoly {
    let d = Diagram::new(shape);
    // (exponents, maj, coinv, cells equal to West) -> count
    let mut acc: HashMap<(Vec<u32>, u32, u32, Vec<bool>), i64> = HashMap::new();
    for_each_filling(shape, basement, n, FillingOrder::RowMajor, false, |rows| {
        let mut maj = 0;
        let mut eq = Vec::with_capacity(d.stats.len());
        for st in &d.stats {
            let s = st.cell;
            let v = rows[s.row - 1][s.col - 1];
            let w = value(basement, rows, Cell::new(s.row, s.col - 1));
            if w < v {
                maj += st.leg as u32 + 1;
            }
            eq.push(v == w);
        }
        let key = (exponents(rows, n), maj, coinv_of(&d, basement, rows), eq);
        *acc.entry(key).or_insert(0) += 1;
    });
    let mut weights: HashMap<(u32, u32, Vec<bool>), QtPoly> = HashMap::new();
    let mut out = XPoly::zero(n);
    for ((exps, maj, coinv, eq), count) in acc {
        let w = weights
            .entry((maj, coinv, eq.clone()))
            .or_insert_with(|| {
                let mut w = QtPoly::monomial(maj, coinv, 1.into());
                for (st, &e) in d.stats.iter().zip(&eq) {
                    w = &w
                        * &if e {
                            QtPoly::one_minus(st.leg as u32 + 1, st.arm as u32 + 1)
                        } else {
                            QtPoly::one_minus(0, 1)
                        };
                }
                w
            })
            .clone();
        out.add_term(exps, w.scale(&count.into()));
    }
    out
}

/// `lambda(g)` padded with zeros to `n` rows.
fn partition_shape(l: &Partition, n: usize) -> WeakComposition {
    let mut p = l.parts().to_vec();
    p.resize(n.max(p.len()), 0);
    WeakComposition::new(p)
}

/// The combinatorial sum over non-attacking fillings of `g` with the given
/// basement. With the identity basement this is the integral form of `E_g`;
/// with the reversed basement (and `g` reversed) it is the integral form of
/// `E'`; with the constant basement the shape is first rearranged into the
/// partition `lambda(g)` and the result is `J_lambda(g)`.
pub fn integral_form(g: &WeakComposition, basement: Basement, n: usize) -> Result<XPoly> {
    check_len(g, n)?;
    let shape = match basement {
        Basement::Constant => partition_shape(&g.to_partition(), n),
        _ => g.clone(),
    };
    Ok(master_sum(&shape, &basement.entries(n), n))
}

/// `Π (1 - q^(leg+1) t^(arm+1))` over the cells of `g`.
pub fn integral_form_factor(g: &WeakComposition) -> QtPoly {
    cell_stats(g).iter().fold(QtPoly::one(), |acc, st| {
        &acc * &QtPoly::one_minus(st.leg as u32 + 1, st.arm as u32 + 1)
    })
}

/// Nonsymmetric Hall-Littlewood polynomial `E_g(x_1..x_n; t)`: descentless
/// fillings over the identity basement, weighted by `t^coinv` and `1 - t`
/// for every cell differing from its West neighbour.
pub fn ns_hall_littlewood(g: &WeakComposition, n: usize) -> Result<XPoly> {
    check_len(g, n)?;
    let d = Diagram::new(g);
    let basement = Basement::Identity.entries(n);
    let mut acc: HashMap<(Vec<u32>, u32, u32), i64> = HashMap::new();
    for_each_filling(g, &basement, n, FillingOrder::RowMajor, true, |rows| {
        let neq = d
            .stats
            .iter()
            .filter(|st| {
                let s = st.cell;
                rows[s.row - 1][s.col - 1] != value(&basement, rows, Cell::new(s.row, s.col - 1))
            })
            .count() as u32;
        let key = (exponents(rows, n), coinv_of(&d, &basement, rows), neq);
        *acc.entry(key).or_insert(0) += 1;
    });
    let mut out = XPoly::zero(n);
    for ((exps, coinv, neq), count) in acc {
        let w = &QtPoly::monomial(0, coinv, count.into()) * &QtPoly::one_minus(0, 1).pow(neq);
        out.add_term(exps, w);
    }
    Ok(out)
}

/// Quasisymmetric Hall-Littlewood polynomial `L_a(x_1..x_n; t)`.
pub fn l_alpha(a: &Composition, n: usize) -> Result<XPoly> {
    let mut p = XPoly::zero(n);
    for g in expand_to_weak(a, n)? {
        p += &ns_hall_littlewood(&g, n)?;
    }
    Ok(p)
}

/// `L_a` in the monomial basis; fails unless the polynomial is quasisymmetric
/// and `n >= |a|`.
pub fn l_alpha_M(a: &Composition, n: usize) -> Result<QSymExpr> {
    if n < a.size() {
        return Err(Error::InsufficientVariables {
            needed: a.size(),
            available: n,
        });
    }
    xpoly_to_M(&l_alpha(a, n)?)
}

/// Hall-Littlewood `P_l(x_1..x_n; t)` as the sum of `L_a` over the
/// rearrangements of `l`.
pub fn hall_littlewood_P(l: &Partition, n: usize) -> Result<XPoly> {
    if n < l.len() {
        return Err(Error::InsufficientVariables {
            needed: l.len(),
            available: n,
        });
    }
    let mut p = XPoly::zero(n);
    for a in l.rearrangements() {
        p += &l_alpha(&a, n)?;
    }
    Ok(p)
}

/// `P_l` recovered from the constant-basement sum at `q = 0` by dividing out
/// `Π (1 - t^(arm+1))` over cells with `leg = 0`.
pub fn hall_littlewood_from_integral_form(l: &Partition, n: usize) -> Result<XPoly> {
    let shape = partition_shape(l, n);
    let j = integral_form(&shape, Basement::Constant, n)?.specialize(Some(0), None);
    let d = cell_stats(&shape)
        .iter()
        .filter(|st| st.leg == 0)
        .fold(QtPoly::one(), |acc, st| {
            &acc * &QtPoly::one_minus(0, st.arm as u32 + 1)
        });
    let mut out = XPoly::zero(n);
    for (e, c) in j.terms() {
        let q = c
            .div_exact(&d)
            .ok_or_else(|| Error::invalid("division", format!("{c} is not divisible by {d}")))?;
        out.add_term(e.to_vec(), q);
    }
    Ok(out)
}

/// The base of a triple in a filling with distinct entries: the cell holding
/// the middle value, or the smallest one if the triple touches the basement.
pub fn base_square(tau: &AugmentedFilling, t: &Triple) -> Cell {
    let val = |c: Cell| tau.value(c).expect("cell of the filling");
    let mut cells = [t.a, t.b, t.c];
    cells.sort_by_key(|&c| val(c));
    if cells.iter().any(|c| c.col == 0) {
        cells[0]
    } else {
        cells[1]
    }
}

/// `Π_s (q^inv_s t^nondes_s - q^coinv_s t^(1+maj_s))` for a standard filling
/// of a partition-shaped diagram.
///
/// `nondes_s = leg(s) + 1` when `West(s)` is a filled cell with a larger entry
/// and is 0 when `West(s)` is in the basement; `maj_s = leg(s)` when
/// `East(s)` exists and holds a larger entry.
pub fn jmu_factor(tau: &AugmentedFilling) -> QtPoly {
    let g = tau.shape();
    let mut inv_s: HashMap<Cell, u32> = HashMap::new();
    let mut coinv_s: HashMap<Cell, u32> = HashMap::new();
    for t in tau.triples() {
        let base = base_square(tau, &t);
        let m = if tau.is_inversion(&t) {
            &mut inv_s
        } else {
            &mut coinv_s
        };
        *m.entry(base).or_insert(0) += 1;
    }
    let mut out = QtPoly::one();
    for st in cell_stats(&g) {
        let s = st.cell;
        let v = tau.value(s).expect("cell");
        let leg = st.leg as u32;
        let nondes = if s.col > 1 && tau.value(Cell::new(s.row, s.col - 1)).expect("cell") >= v {
            leg + 1
        } else {
            0
        };
        let maj = match tau.value(Cell::new(s.row, s.col + 1)) {
            Some(e) if e > v => leg,
            _ => 0,
        };
        let inv = inv_s.get(&s).copied().unwrap_or(0);
        let co = coinv_s.get(&s).copied().unwrap_or(0);
        let f = &QtPoly::monomial(inv, nondes, 1.into()) - &QtPoly::monomial(co, 1 + maj, 1.into());
        out = &out * &f;
    }
    out
}

/// Reading order for the fundamental expansion: columns right to left,
/// top to bottom within a column.
pub fn reading_cells(g: &WeakComposition) -> Vec<Cell> {
    let width = g.parts().iter().copied().max().unwrap_or(0);
    (1..=width)
        .rev()
        .flat_map(|k| {
            g.parts()
                .iter()
                .enumerate()
                .filter(move |(_, &l)| l >= k)
                .map(move |(r, _)| Cell::new(r + 1, k))
        })
        .collect()
}

/// The standard filling whose reading word is `word`, on the diagram used by
/// [`j_fundamental`] for `l` (rows are the columns of `l`).
pub fn jmu_filling(l: &Partition, word: &[usize], basement: usize) -> AugmentedFilling {
    let g = WeakComposition::new(l.conjugate().parts().to_vec());
    let mut rows: Vec<Vec<usize>> = g.parts().iter().map(|&k| vec![0; k]).collect();
    for (c, &v) in reading_cells(&g).iter().zip(word) {
        rows[c.row - 1][c.col - 1] = v;
    }
    AugmentedFilling::with_basement(vec![basement; rows.len()], rows).expect("positive entries")
}

/// Expansion of `J_l(X_n; q, t)` in fundamental quasisymmetric functions as
/// a sum over permutations `tau` of `|l|`. Each permutation is placed as the
/// reading word of a standard filling of the conjugate diagram, and indexes
/// `F` by the set of `i` with `i + 1` read before `i`.
pub fn j_fundamental(l: &Partition, n: usize) -> Result<QSymExpr> {
    let m = l.size();
    let basement = n.max(m) + 1;
    let mut out = QSymExpr::zero(Basis::F);
    for word in (1..=m).permutations(m) {
        let tau = jmu_filling(l, &word, basement);
        let f = jmu_factor(&tau);
        if f.is_zero() {
            continue;
        }
        let mut pos = vec![0; m + 1];
        for (p, &v) in word.iter().enumerate() {
            pos[v] = p;
        }
        let des: BTreeSet<usize> = (1..m).filter(|&i| pos[i] > pos[i + 1]).collect();
        out.add_term(composition_of(&des, m)?, f);
    }
    Ok(out)
}

/// Whether some entry `j` of a standard filling sits in a column right of
/// column `j`.
pub fn violates_column_condition(tau: &AugmentedFilling) -> bool {
    tau.cells().any(|s| s.col > tau.value(s).expect("cell"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{enumerate_compositions, enumerate_partitions};
    use crate::qsym::{demazure_atom, monomial_qsym_poly, qschur_poly, to_poly};
    use crate::tableaux::enumerate_ssafs;

    fn w(v: &[usize]) -> WeakComposition {
        WeakComposition::new(v.to_vec())
    }

    fn c(s: &str) -> Composition {
        s.parse().unwrap()
    }

    fn weak_compositions(n: usize, max_size: usize) -> Vec<WeakComposition> {
        (0..n)
            .map(|_| 0..=max_size)
            .multi_cartesian_product()
            .filter(|v| v.iter().sum::<usize>() <= max_size)
            .map(WeakComposition::new)
            .collect()
    }

    fn schur_poly(l: &Partition, n: usize) -> XPoly {
        let mut p = XPoly::zero(n);
        for a in l.rearrangements() {
            p += &qschur_poly(&a, n);
        }
        p
    }

    #[test]
    fn arm_leg_tables() {
        let g = w(&[1, 0, 3, 2, 3]);
        let legs: Vec<Vec<usize>> = (1..=5)
            .map(|r| {
                (1..=g.parts()[r - 1])
                    .map(|k| leg(&g, Cell::new(r, k)).unwrap())
                    .collect()
            })
            .collect();
        let arms: Vec<Vec<usize>> = (1..=5)
            .map(|r| {
                (1..=g.parts()[r - 1])
                    .map(|k| arm(&g, Cell::new(r, k)).unwrap())
                    .collect()
            })
            .collect();
        assert_eq!(
            legs,
            vec![vec![0], vec![], vec![2, 1, 0], vec![1, 0], vec![2, 1, 0]]
        );
        assert_eq!(
            arms,
            vec![vec![0], vec![], vec![4, 3, 1], vec![2, 1], vec![3, 2, 1]]
        );
        assert!(leg(&g, Cell::new(2, 1)).is_err());
        for k in 1..=5 {
            let g = w(&[k]);
            for s in 1..=k {
                assert_eq!(leg(&g, Cell::new(1, s)).unwrap(), k - s);
                assert_eq!(arm(&g, Cell::new(1, s)).unwrap(), 0);
            }
        }
    }

    #[test]
    fn filling_orders_agree() {
        assert_eq!(
            enumerate_fillings(&w(&[1]), Basement::Identity, 1)
                .unwrap()
                .len(),
            1
        );
        assert_eq!(
            enumerate_fillings(&w(&[1, 0]), Basement::Identity, 2)
                .unwrap()
                .len(),
            2
        );
        assert_eq!(
            enumerate_fillings(&w(&[0, 1]), Basement::Identity, 2)
                .unwrap()
                .len(),
            1
        );
        for n in 1..=4 {
            for g in weak_compositions(n, 4) {
                for b in [Basement::Identity, Basement::Reversed, Basement::Constant] {
                    let mut r =
                        enumerate_fillings_ordered(&g, b, n, FillingOrder::RowMajor).unwrap();
                    let mut k =
                        enumerate_fillings_ordered(&g, b, n, FillingOrder::ColumnMajor).unwrap();
                    assert!(r.iter().all(|f| f.is_non_attacking()));
                    r.sort_by(|x, y| x.rows().cmp(y.rows()));
                    k.sort_by(|x, y| x.rows().cmp(y.rows()));
                    assert_eq!(r, k, "{g}");
                }
            }
        }
    }

    #[test]
    fn brute_force_fillings() {
        for n in 1..=3 {
            for g in weak_compositions(n, 3) {
                let cells = g.size();
                let mut expect = Vec::new();
                for vals in (0..cells).map(|_| 1..=n).multi_cartesian_product() {
                    let mut it = vals.into_iter();
                    let rows: Vec<Vec<usize>> = g
                        .parts()
                        .iter()
                        .map(|&l| it.by_ref().take(l).collect())
                        .collect();
                    let f = AugmentedFilling::new(Basement::Identity, rows);
                    if f.is_non_attacking() {
                        expect.push(f);
                    }
                }
                if cells == 0 {
                    expect = vec![AugmentedFilling::new(Basement::Identity, vec![vec![]; n])];
                }
                let got = enumerate_fillings(&g, Basement::Identity, n).unwrap();
                assert_eq!(got.len(), expect.len(), "{g}");
            }
        }
    }

    #[test]
    fn descentless_fillings_without_coinversions_are_ssafs() {
        for n in 1..=4 {
            for g in weak_compositions(n, 4) {
                let got: BTreeSet<Vec<Vec<usize>>> = enumerate_fillings(&g, Basement::Identity, n)
                    .unwrap()
                    .into_iter()
                    .filter(|f| maj(f) == 0 && coinv(f) == 0)
                    .map(AugmentedFilling::into_rows)
                    .collect();
                let expect: BTreeSet<Vec<Vec<usize>>> = enumerate_ssafs(&g)
                    .into_iter()
                    .map(|s| s.rows().to_vec())
                    .collect();
                assert_eq!(got, expect, "{g}");
            }
        }
    }

    #[test]
    fn pinned_statistics() {
        let f = AugmentedFilling::new(Basement::Identity, vec![vec![], vec![2, 1]]);
        assert!(f.is_non_attacking());
        assert_eq!((maj(&f), coinv(&f)), (0, 0));
        let f = AugmentedFilling::new(Basement::Identity, vec![vec![], vec![2, 2]]);
        assert_eq!((maj(&f), coinv(&f)), (0, 0));
        // a descent at (2,2), worth leg + 1 = 1
        let f = AugmentedFilling::new(Basement::Identity, vec![vec![1], vec![2, 1, 2]]);
        assert_eq!(maj(&f), 1);
        for s in enumerate_ssafs(&w(&[0, 2, 1])) {
            let f = s.to_filling();
            assert_eq!((maj(&f), coinv(&f)), (0, 0));
        }
    }

    #[test]
    fn master_at_zero_gives_atoms_and_schur() {
        for n in 1..=3 {
            for g in weak_compositions(n, 3) {
                let e = integral_form(&g, Basement::Identity, n).unwrap();
                assert_eq!(
                    e.specialize(Some(0), Some(0)),
                    demazure_atom(&g, n).unwrap(),
                    "{g}"
                );
                let j = integral_form(&g, Basement::Constant, n).unwrap();
                assert_eq!(
                    j.specialize(Some(0), Some(0)),
                    schur_poly(&g.to_partition(), n),
                    "{g}"
                );
            }
        }
    }

    #[test]
    fn leading_coefficient_is_the_product() {
        for n in 1..=3 {
            for g in weak_compositions(n, 3) {
                let e = integral_form(&g, Basement::Identity, n).unwrap();
                let x: Vec<u32> = g.parts().iter().map(|&x| x as u32).collect();
                assert_eq!(e.coeff(&x), integral_form_factor(&g), "{g}");
            }
        }
    }

    #[test]
    fn small_integral_forms() {
        // J_(2)(x1,x2) = (1-t)(1-qt) m_2 + (1+q)(1-t)^2 m_11
        let j = integral_form(&w(&[2, 0]), Basement::Constant, 2).unwrap();
        let a = &QtPoly::one_minus(0, 1) * &QtPoly::one_minus(1, 1);
        let b = &(&QtPoly::one() + &QtPoly::q()) * &QtPoly::one_minus(0, 1).pow(2);
        assert_eq!(j.coeff(&[2, 0]), a);
        assert_eq!(j.coeff(&[1, 1]), b);
        // J_(1,1) = (1-t)(1-t^2) x1 x2
        let j = integral_form(&w(&[1, 1]), Basement::Constant, 2).unwrap();
        assert_eq!(j.len(), 1);
        assert_eq!(
            j.coeff(&[1, 1]),
            &QtPoly::one_minus(0, 1) * &QtPoly::one_minus(0, 2)
        );
    }

    #[test]
    fn ns_hall_littlewood_specializations() {
        for n in 1..=3 {
            for g in weak_compositions(n, 3) {
                let e = ns_hall_littlewood(&g, n).unwrap();
                assert_eq!(e.specialize(None, Some(0)), demazure_atom(&g, n).unwrap());
                let i = integral_form(&g, Basement::Identity, n).unwrap();
                assert_eq!(e, i.specialize(Some(0), None), "{g}");
            }
        }
        for k in 1..=3 {
            let mut v = vec![0; 3];
            v[0] = k;
            let e = ns_hall_littlewood(&w(&v), 3).unwrap();
            assert_eq!(e, XPoly::monomial(vec![k as u32, 0, 0], QtPoly::one()));
        }
    }

    #[test]
    fn l_13() {
        let got = l_alpha_M(&c("(1,3)"), 4).unwrap();
        let omt = QtPoly::one_minus(0, 1);
        let expect = QSymExpr::from_terms(
            Basis::M,
            [
                (c("(1,3)"), QtPoly::one()),
                (c("(2,2)"), omt.clone()),
                (c("(2,1,1)"), omt.clone()),
                (c("(1,2,1)"), omt.clone()),
                (c("(1,1,2)"), omt.scale(&2.into())),
                (
                    c("(1,1,1,1)"),
                    &(&QtPoly::from_int(2) + &QtPoly::t()) * &omt.pow(2),
                ),
            ],
        );
        assert_eq!(got, expect, "{got}");
    }

    #[test]
    fn l_alpha_specializations() {
        for m in 0..=3 {
            for a in enumerate_compositions(m) {
                let n = m + 1;
                let l = l_alpha(&a, n).unwrap();
                assert_eq!(l.specialize(None, Some(0)), qschur_poly(&a, n), "{a}");
                assert_eq!(
                    l.specialize(None, Some(1)),
                    monomial_qsym_poly(&a, n),
                    "{a}"
                );
                l_alpha_M(&a, n).unwrap();
            }
        }
        assert_eq!(
            l_alpha_M(&c("(1,1,1)"), 3)
                .unwrap()
                .specialize(None, Some(0)),
            QSymExpr::basis_element(Basis::M, c("(1,1,1)"))
        );
    }

    #[test]
    fn hall_littlewood_checks() {
        for m in 0..=3 {
            for l in enumerate_partitions(m) {
                for n in l.len().max(1)..=3 {
                    let p = hall_littlewood_P(&l, n).unwrap();
                    assert!(p.is_symmetric(), "{l}");
                    assert_eq!(p.specialize(None, Some(0)), schur_poly(&l, n));
                    let mut ml = XPoly::zero(n);
                    for a in l.rearrangements() {
                        ml += &monomial_qsym_poly(&a, n);
                    }
                    assert_eq!(p.specialize(None, Some(1)), ml);
                    assert_eq!(
                        hall_littlewood_from_integral_form(&l, n).unwrap(),
                        p,
                        "{l} {n}"
                    );
                }
            }
        }
    }

    #[test]
    fn hall_littlewood_matches_oracle() {
        for m in 0..=4 {
            for l in enumerate_partitions(m) {
                for n in l.len().max(1)..=3 {
                    let oracle = crate::oracle::hall_littlewood_P_oracle(&l, n).unwrap();
                    assert_eq!(hall_littlewood_P(&l, n).unwrap(), oracle, "{l} {n}");
                }
            }
        }
    }

    #[test]
    fn base_example() {
        let f = AugmentedFilling::with_basement(
            vec![8, 8, 8],
            vec![vec![5, 6, 1], vec![2, 7, 4], vec![3]],
        )
        .unwrap();
        let bases: BTreeSet<(Vec<usize>, usize)> = f
            .triples()
            .iter()
            .map(|t| {
                let mut vals: Vec<usize> = [t.a, t.b, t.c]
                    .iter()
                    .map(|&x| f.value(x).unwrap())
                    .collect();
                vals.sort_unstable();
                (vals, f.value(base_square(&f, t)).unwrap())
            })
            .collect();
        for expect in [
            (vec![5, 6, 7], 6),
            (vec![1, 4, 6], 4),
            (vec![2, 3, 8], 2),
            (vec![3, 5, 8], 3),
        ] {
            assert!(bases.contains(&expect), "{expect:?} in {bases:?}");
        }
    }

    #[test]
    fn j_fundamental_matches_integral_form() {
        for m in 0..=3 {
            for l in enumerate_partitions(m) {
                let n = m.max(1);
                let jf = j_fundamental(&l, n).unwrap();
                let j = integral_form(&partition_shape(&l, n), Basement::Constant, n).unwrap();
                assert_eq!(to_poly(&jf, n), j, "{l}");
                let s = jf.specialize(Some(0), Some(0));
                let mut expect = QSymExpr::zero(Basis::F);
                for a in l.rearrangements() {
                    expect
                        .add_scaled(&crate::qsym::expand_S_in_F(&a), &QtPoly::one())
                        .unwrap();
                }
                assert_eq!(s, expect, "{l}");
            }
        }
    }

    #[test]
    fn j_fundamental_vanishing() {
        for m in 1..=4 {
            for l in enumerate_partitions(m) {
                for word in (1..=m).permutations(m) {
                    let tau = jmu_filling(&l, &word, m + 1);
                    if violates_column_condition(&tau) {
                        assert!(jmu_factor(&tau).is_zero(), "{tau}");
                    }
                }
            }
        }
    }
}
