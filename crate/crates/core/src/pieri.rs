//! The rem/row/col operators and the Pieri rules for quasisymmetric Schur
//! functions, with a brute-force product for cross-checking.
//!
//! Operators return `Option<Composition>`: `None` is the failure marker,
//! distinct from the empty composition `()`.

#![allow(non_snake_case)]

use std::collections::BTreeSet;

use serde::Serialize;

use crate::combinatorics::{enumerate_partitions, Composition, Partition};
use crate::error::Result;
use crate::poly::QtPoly;
use crate::qsym::{express_in_S, qschur_poly, xpoly_to_M, Basis, QSymExpr};
use crate::tableaux::SkewShape;

/// Decrements the rightmost part equal to `s`, dropping it if it hits zero.
pub fn rem_s(a: &Composition, s: usize) -> Option<Composition> {
    let i = a.parts().iter().rposition(|&x| x == s)?;
    let mut parts = a.parts().to_vec();
    parts[i] -= 1;
    if parts[i] == 0 {
        parts.remove(i);
    }
    Some(Composition::from_parts_unchecked(parts))
}

/// Applies `rem_s` for `s` in `set`, largest first.
pub fn row_op(a: &Composition, set: &BTreeSet<usize>) -> Option<Composition> {
    set.iter()
        .rev()
        .try_fold(a.clone(), |acc, &s| rem_s(&acc, s))
}

/// Applies `rem_s` for `s` in the multiset `mset`, smallest first.
pub fn col_op(a: &Composition, mset: &[usize]) -> Option<Composition> {
    let mut sorted = mset.to_vec();
    sorted.sort_unstable();
    sorted.iter().try_fold(a.clone(), |acc, &s| rem_s(&acc, s))
}

/// The columns occupied by a strip.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StripColumns {
    pub as_set: BTreeSet<usize>,
    pub as_multiset: Vec<usize>,
}

pub fn strip_columns(shape: &SkewShape) -> StripColumns {
    let cols = shape.columns();
    StripColumns {
        as_set: cols.iter().copied().collect(),
        as_multiset: cols,
    }
}

fn strips(lambda: &Partition, n: usize, horizontal: bool) -> Vec<(Partition, SkewShape)> {
    enumerate_partitions(lambda.size() + n)
        .into_iter()
        .filter(|mu| mu.contains(lambda))
        .filter_map(|mu| {
            let sk = SkewShape::new(mu.clone(), lambda.clone()).ok()?;
            let ok = if horizontal {
                sk.is_horizontal_strip()
            } else {
                sk.is_vertical_strip()
            };
            ok.then_some((mu, sk))
        })
        .collect()
}

/// `S_(n) * S_a` as a sum of `S_b`.
pub fn pieri_row(a: &Composition, n: usize) -> QSymExpr {
    let mut out = QSymExpr::zero(Basis::S);
    for (mu, sk) in strips(&a.to_partition(), n, true) {
        let cols = strip_columns(&sk).as_set;
        for b in mu.rearrangements() {
            if row_op(&b, &cols).as_ref() == Some(a) {
                out.add_term(b, QtPoly::one());
            }
        }
    }
    out
}

/// `S_(1^n) * S_a` as a sum of `S_b`.
pub fn pieri_col(a: &Composition, n: usize) -> QSymExpr {
    let mut out = QSymExpr::zero(Basis::S);
    for (mu, sk) in strips(&a.to_partition(), n, false) {
        let cols = strip_columns(&sk).as_multiset;
        for b in mu.rearrangements() {
            if col_op(&b, &cols).as_ref() == Some(a) {
                out.add_term(b, QtPoly::one());
            }
        }
    }
    out
}

/// `S_a * S_b` by multiplying polynomials in `|a| + |b|` variables and
/// reading the result back in the S basis.
pub fn product_S(a: &Composition, b: &Composition) -> Result<QSymExpr> {
    let n = a.size() + b.size();
    let p = &qschur_poly(a, n) * &qschur_poly(b, n);
    express_in_S(&xpoly_to_M(&p)?)
}

/// Whether `b` appears in `S_(1) * S_a`.
pub fn cover_relation(a: &Composition, b: &Composition) -> bool {
    !pieri_row(a, 1).coeff(b).is_zero()
}

/// All `b` covering `a`.
pub fn covers(a: &Composition) -> BTreeSet<Composition> {
    pieri_row(a, 1).support()
}
