//! Quasisymmetric expressions in the monomial, fundamental and
//! quasisymmetric Schur bases, and their polynomial truncations.

#![allow(non_snake_case)]

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::combinatorics::{
    composition_of, display_cmp, enumerate_compositions, expand_to_weak, subsets_of_size,
    triangle_cmp, Composition, Partition, WeakComposition,
};
use crate::error::{Error, Result};
use crate::poly::{monomial_string, QtPoly, XPoly};
use crate::tableaux::{
    enumerate_comts, enumerate_reversetableaux, enumerate_ssafs, enumerate_standard_comts,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Basis {
    M,
    F,
    S,
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Basis::M => "M",
            Basis::F => "F",
            Basis::S => "S",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for Basis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "M" | "m" => Ok(Basis::M),
            "F" | "f" => Ok(Basis::F),
            "S" | "s" => Ok(Basis::S),
            _ => Err(Error::Parse {
                what: "basis",
                input: s.to_string(),
            }),
        }
    }
}

/// A finite linear combination of basis elements with `ℤ[q,t]` coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSymExpr {
    basis: Basis,
    terms: BTreeMap<Composition, QtPoly>,
}

impl QSymExpr {
    pub fn zero(basis: Basis) -> Self {
        QSymExpr {
            basis,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis_element(basis: Basis, a: Composition) -> Self {
        let mut e = Self::zero(basis);
        e.add_term(a, QtPoly::one());
        e
    }

    pub fn from_terms(
        basis: Basis,
        terms: impl IntoIterator<Item = (Composition, QtPoly)>,
    ) -> Self {
        let mut e = Self::zero(basis);
        for (a, c) in terms {
            e.add_term(a, c);
        }
        e
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, a: &Composition) -> QtPoly {
        self.terms.get(a).cloned().unwrap_or_default()
    }

    /// Terms by size, then ▶-descending.
    pub fn terms(&self) -> Vec<(&Composition, &QtPoly)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|x, y| display_cmp(x.0, y.0));
        v
    }

    pub fn support(&self) -> BTreeSet<Composition> {
        self.terms.keys().cloned().collect()
    }

    pub fn add_term(&mut self, a: Composition, c: QtPoly) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(a.clone()).or_default();
        *entry += &c;
        if entry.is_zero() {
            self.terms.remove(&a);
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &QSymExpr, c: &QtPoly) -> Result<()> {
        if other.basis != self.basis {
            return Err(Error::BasisMismatch(
                self.basis.to_string(),
                other.basis.to_string(),
            ));
        }
        for (a, x) in &other.terms {
            self.add_term(a.clone(), x * c);
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &QSymExpr) -> Result<QSymExpr> {
        let mut out = self.clone();
        out.add_scaled(other, &QtPoly::one())?;
        Ok(out)
    }

    pub fn checked_sub(&self, other: &QSymExpr) -> Result<QSymExpr> {
        let mut out = self.clone();
        out.add_scaled(other, &QtPoly::from_int(-1))?;
        Ok(out)
    }

    pub fn scale(&self, c: &QtPoly) -> QSymExpr {
        QSymExpr::from_terms(
            self.basis,
            self.terms.iter().map(|(a, x)| (a.clone(), x * c)),
        )
    }

    pub fn specialize(&self, q: Option<i64>, t: Option<i64>) -> QSymExpr {
        QSymExpr::from_terms(
            self.basis,
            self.terms
                .iter()
                .map(|(a, x)| (a.clone(), x.specialize(q, t))),
        )
    }

    /// Splits into homogeneous components keyed by degree.
    pub fn by_degree(&self) -> BTreeMap<usize, QSymExpr> {
        let mut out: BTreeMap<usize, QSymExpr> = BTreeMap::new();
        for (a, c) in &self.terms {
            out.entry(a.size())
                .or_insert_with(|| QSymExpr::zero(self.basis))
                .add_term(a.clone(), c.clone());
        }
        out
    }

    /// Integer coefficients, if every coefficient is a constant that fits.
    pub fn integer_terms(&self) -> Option<BTreeMap<Composition, i64>> {
        self.terms
            .iter()
            .map(|(a, c)| c.as_i64().map(|x| (a.clone(), x)))
            .collect()
    }
}

impl fmt::Display for QSymExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (a, c)) in self.terms().into_iter().enumerate() {
            let neg = !c.is_compound() && c.terms().next().is_some_and(|(_, _, v)| v.is_negative());
            let shown = if neg { -c } else { c.clone() };
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if a.is_empty() {
                write!(f, "{shown}")?;
                continue;
            }
            if shown.is_compound() {
                write!(f, "({shown})")?;
            } else if !shown.is_one() {
                write!(f, "{shown}")?;
            }
            write!(f, "{}{}", self.basis, a)?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct ExprTerm {
    composition: Composition,
    coeff: QtPoly,
}

#[derive(Serialize, Deserialize)]
struct ExprRepr {
    basis: Basis,
    terms: Vec<ExprTerm>,
}

impl Serialize for QSymExpr {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ExprRepr {
            basis: self.basis,
            terms: self
                .terms()
                .into_iter()
                .map(|(a, c)| ExprTerm {
                    composition: a.clone(),
                    coeff: c.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for QSymExpr {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = ExprRepr::deserialize(d)?;
        Ok(QSymExpr::from_terms(
            r.basis,
            r.terms.into_iter().map(|t| (t.composition, t.coeff)),
        ))
    }
}

/// `M_a(x_1..x_n)`; zero when `n < ℓ(a)`.
pub fn monomial_qsym_poly(a: &Composition, n: usize) -> XPoly {
    let mut p = XPoly::zero(n);
    if a.len() > n {
        return p;
    }
    for pos in subsets_of_size(n, a.len()) {
        let mut e = vec![0u32; n];
        for (&i, &x) in pos.iter().zip(a.parts()) {
            e[i] = x as u32;
        }
        p.add_term(e, QtPoly::one());
    }
    p
}

fn require(e: &QSymExpr, basis: Basis) -> Result<()> {
    if e.basis != basis {
        return Err(Error::BasisMismatch(basis.to_string(), e.basis.to_string()));
    }
    Ok(())
}

/// `F_a = Σ_{a ⪰ b} M_b`, extended linearly.
pub fn f_to_m(e: &QSymExpr) -> Result<QSymExpr> {
    require(e, Basis::F)?;
    let mut out = QSymExpr::zero(Basis::M);
    for (a, c) in &e.terms {
        for b in a.refinements() {
            out.add_term(b, c.clone());
        }
    }
    Ok(out)
}

/// Möbius inversion of [`f_to_m`]: `M_a = Σ_{a ⪰ b} (-1)^{ℓ(b)-ℓ(a)} F_b`.
pub fn m_to_f(e: &QSymExpr) -> Result<QSymExpr> {
    require(e, Basis::M)?;
    let mut out = QSymExpr::zero(Basis::F);
    for (a, c) in &e.terms {
        for b in a.refinements() {
            let sign = if (b.len() - a.len()) % 2 == 0 { 1 } else { -1 };
            out.add_term(b, c.scale(&BigInt::from(sign)));
        }
    }
    Ok(out)
}

/// Coefficient of `M_b` in `S_a`: ComTs of shape `a` and weight `b`.
pub fn expand_S_in_M(a: &Composition) -> QSymExpr {
    expand_S_in_M_bounded(a, a.size())
}

/// As [`expand_S_in_M`], enumerating ComTs with entries up to `max_entry`.
///
/// Only ComTs whose weight has no internal zeros contribute: a weight such as
/// `(1,0,2)` is the monomial `x1*x3^2`, which is not a leading monomial of
/// any `M_b`.
pub fn expand_S_in_M_bounded(a: &Composition, max_entry: usize) -> QSymExpr {
    let mut out = QSymExpr::zero(Basis::M);
    for t in enumerate_comts(a, max_entry) {
        let w = t.weight();
        if w.parts().iter().all(|&x| x > 0) {
            out.add_term(w.collapse(), QtPoly::one());
        }
    }
    out
}

/// Coefficient of `F_b` in `S_a`: standard ComTs of shape `a` with descent
/// composition `b`.
pub fn expand_S_in_F(a: &Composition) -> QSymExpr {
    let n = a.size();
    let mut out = QSymExpr::zero(Basis::F);
    if n == 0 {
        out.add_term(Composition::empty(), QtPoly::one());
        return out;
    }
    for t in enumerate_standard_comts(a) {
        let d = t.descents().expect("standard");
        out.add_term(
            composition_of(&d, n).expect("descents lie in [n-1]"),
            QtPoly::one(),
        );
    }
    out
}

/// `A_g = Σ x^F` over SSAFs of shape `g`, in `n = ℓ(g)` variables.
pub fn demazure_atom(g: &WeakComposition, n: usize) -> Result<XPoly> {
    if g.len() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            found: g.len(),
        });
    }
    let mut p = XPoly::zero(n);
    for f in enumerate_ssafs(g) {
        let w: Vec<u32> = f.weight().parts().iter().map(|&x| x as u32).collect();
        p.add_term(w, QtPoly::one());
    }
    Ok(p)
}

/// `S_a(x_1..x_n)` as the sum of atoms over weak compositions collapsing to `a`.
pub fn qschur_poly(a: &Composition, n: usize) -> XPoly {
    let mut p = XPoly::zero(n);
    let Ok(shapes) = expand_to_weak(a, n) else {
        return p;
    };
    for g in shapes {
        p += &demazure_atom(&g, n).expect("length n");
    }
    p
}

/// `s_l = Σ S_a` over the rearrangements `a` of `l`.
pub fn schur_in_S(l: &Partition) -> QSymExpr {
    QSymExpr::from_terms(
        Basis::S,
        l.rearrangements().into_iter().map(|a| (a, QtPoly::one())),
    )
}

/// `s_l` in the M basis from Kostka numbers counted with reversetableaux:
/// `K_{l,mu}` is the number of reversetableaux of shape `l` and weight the
/// reversal of `mu`.
pub fn schur_oracle_M(l: &Partition) -> QSymExpr {
    let n = l.size();
    let mut kostka: BTreeMap<Partition, i64> = BTreeMap::new();
    for t in enumerate_reversetableaux(l, n) {
        let w = t.weight();
        let parts = w.parts();
        if parts.iter().all(|&x| x > 0) && parts.windows(2).all(|p| p[0] <= p[1]) {
            *kostka.entry(w.to_partition()).or_default() += 1;
        }
    }
    let mut out = QSymExpr::zero(Basis::M);
    for (mu, k) in kostka {
        for a in mu.rearrangements() {
            out.add_term(a, QtPoly::from_int(k));
        }
    }
    out
}

/// Rows and columns indexed by the compositions of `n`, ▶-descending;
/// entry `(a, b)` is the coefficient of `M_b` or `F_b` in `S_a`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TransitionMatrix {
    pub basis: Basis,
    pub n: usize,
    pub index: Vec<Composition>,
    pub entries: Vec<Vec<i64>>,
}

impl TransitionMatrix {
    pub fn get(&self, a: &Composition, b: &Composition) -> Option<i64> {
        let i = self.index.iter().position(|x| x == a)?;
        let j = self.index.iter().position(|x| x == b)?;
        Some(self.entries[i][j])
    }

    pub fn is_identity(&self) -> bool {
        self.entries
            .iter()
            .enumerate()
            .all(|(i, row)| row.iter().enumerate().all(|(j, &x)| x == i64::from(i == j)))
    }

    /// Unit diagonal and zeros below it.
    pub fn is_upper_unitriangular(&self) -> bool {
        self.entries
            .iter()
            .enumerate()
            .all(|(i, row)| row[i] == 1 && row[..i].iter().all(|&x| x == 0))
    }
}

impl fmt::Display for TransitionMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = self.index.iter().map(ToString::to_string).collect();
        let lw = labels.iter().map(String::len).max().unwrap_or(0);
        let cells: Vec<Vec<String>> = self
            .entries
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&x| {
                        if x == 0 {
                            ".".to_string()
                        } else {
                            x.to_string()
                        }
                    })
                    .collect()
            })
            .collect();
        let cw = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        for (i, row) in cells.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let body: Vec<String> = row.iter().map(|c| format!("{c:>cw$}")).collect();
            write!(f, "{:<lw$}  {}", labels[i], body.join(" "))?;
        }
        Ok(())
    }
}

pub fn transition_matrix(basis: Basis, n: usize) -> Result<TransitionMatrix> {
    let index = enumerate_compositions(n);
    let mut entries = Vec::with_capacity(index.len());
    for a in &index {
        let e = match basis {
            Basis::M => expand_S_in_M(a),
            Basis::F => expand_S_in_F(a),
            Basis::S => return Err(Error::invalid("basis", "transition matrices target M or F")),
        };
        entries.push(
            index
                .iter()
                .map(|b| e.coeff(b).as_i64().expect("small integer coefficient"))
                .collect(),
        );
    }
    Ok(TransitionMatrix {
        basis,
        n,
        index,
        entries,
    })
}

/// Rewrites an M- or F-expansion in the S basis by unitriangular
/// back-substitution, degree by degree.
pub fn express_in_S(e: &QSymExpr) -> Result<QSymExpr> {
    let expand: fn(&Composition) -> QSymExpr = match e.basis {
        Basis::S => return Ok(e.clone()),
        Basis::M => expand_S_in_M,
        Basis::F => expand_S_in_F,
    };
    let mut out = QSymExpr::zero(Basis::S);
    for (_, mut rest) in e.by_degree() {
        while let Some(top) = rest.terms.keys().max_by(|x, y| triangle_cmp(x, y)).cloned() {
            let c = rest.coeff(&top);
            rest.add_scaled(&expand(&top), &-&c)?;
            debug_assert!(rest.coeff(&top).is_zero());
            out.add_term(top, c);
        }
    }
    Ok(out)
}

/// Converts between the three bases.
pub fn convert(e: &QSymExpr, target: Basis) -> Result<QSymExpr> {
    use Basis::*;
    match (e.basis, target) {
        (x, y) if x == y => Ok(e.clone()),
        (F, M) => f_to_m(e),
        (M, F) => m_to_f(e),
        (M | F, S) => express_in_S(e),
        (S, _) => {
            let mut out = QSymExpr::zero(target);
            for (a, c) in &e.terms {
                let x = match target {
                    M => expand_S_in_M(a),
                    _ => expand_S_in_F(a),
                };
                out.add_scaled(&x, c)?;
            }
            Ok(out)
        }
        _ => unreachable!(),
    }
}

/// Truncates an expression to a polynomial in `n` variables.
pub fn to_poly(e: &QSymExpr, n: usize) -> XPoly {
    let m = match e.basis {
        Basis::M => e.clone(),
        _ => convert(e, Basis::M).expect("conversion to M"),
    };
    let mut p = XPoly::zero(n);
    for (a, c) in &m.terms {
        p += &monomial_qsym_poly(a, n).scale(c);
    }
    p
}

/// Reads a quasisymmetric polynomial in the M basis, checking every
/// monomial against the one with the same nonzero exponents packed left.
pub fn xpoly_to_M(p: &XPoly) -> Result<QSymExpr> {
    let n = p.nvars();
    let deg = p.total_degree() as usize;
    if !p.is_zero() && n < deg {
        return Err(Error::InsufficientVariables {
            needed: deg,
            available: n,
        });
    }
    let mut out = QSymExpr::zero(Basis::M);
    let mut seen: BTreeSet<Composition> = BTreeSet::new();
    for (e, _) in p.terms() {
        let a = WeakComposition::new(e.iter().map(|&x| x as usize).collect()).collapse();
        if !seen.insert(a.clone()) {
            continue;
        }
        let packed: Vec<u32> = packed_exponents(&a, n);
        let c = p.coeff(&packed);
        for g in expand_to_weak(&a, n)? {
            let exps: Vec<u32> = g.parts().iter().map(|&x| x as u32).collect();
            if p.coeff(&exps) != c {
                return Err(Error::NotQuasisymmetric {
                    left: monomial_string(&packed),
                    right: monomial_string(&exps),
                });
            }
        }
        out.add_term(a, c);
    }
    Ok(out)
}

fn packed_exponents(a: &Composition, n: usize) -> Vec<u32> {
    let mut e = vec![0u32; n];
    for (i, &x) in a.parts().iter().enumerate() {
        e[i] = x as u32;
    }
    e
}

/// `S_a = M_a` exactly when `a` is all ones.
pub fn is_m_form(a: &Composition) -> bool {
    a.parts().iter().all(|&x| x == 1)
}

/// `S_a = F_a` exactly when `a = (m, 1^{e1}, 2, 1^{e2}, ..., 2, 1^f)` with
/// `m != 1` (possibly absent) and every `e_i >= 1`.
pub fn is_f_form(a: &Composition) -> bool {
    let p = a.parts();
    let rest = match p.first() {
        Some(&m) if m != 1 => &p[1..],
        _ => p,
    };
    rest.iter().enumerate().all(|(i, &x)| match x {
        1 => true,
        2 => i > 0 && rest[i - 1] == 1,
        _ => false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> Composition {
        s.parse().unwrap()
    }

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn expr(basis: Basis, terms: &[(&str, i64)]) -> QSymExpr {
        QSymExpr::from_terms(
            basis,
            terms.iter().map(|&(a, x)| (c(a), QtPoly::from_int(x))),
        )
    }

    fn xp(n: usize, terms: &[&[u32]]) -> XPoly {
        let mut out = XPoly::zero(n);
        for e in terms {
            out.add_term(e.to_vec(), QtPoly::one());
        }
        out
    }

    #[test]
    fn monomial_polys() {
        assert_eq!(
            monomial_qsym_poly(&c("(1,2)"), 3),
            xp(3, &[&[1, 2, 0], &[1, 0, 2], &[0, 1, 2]])
        );
        assert_eq!(monomial_qsym_poly(&c("()"), 4), XPoly::one(4));
        assert_eq!(monomial_qsym_poly(&c("(2,1)"), 2), xp(2, &[&[2, 1]]));
        assert!(monomial_qsym_poly(&c("(1,1,1)"), 2).is_zero());
    }

    #[test]
    fn f_to_m_examples() {
        let m = f_to_m(&expr(Basis::F, &[("(1,2)", 1)])).unwrap();
        assert_eq!(m, expr(Basis::M, &[("(1,2)", 1), ("(1,1,1)", 1)]));
        assert_eq!(
            f_to_m(&expr(Basis::F, &[("(1)", 1)])).unwrap(),
            expr(Basis::M, &[("(1)", 1)])
        );
        assert_eq!(
            f_to_m(&expr(Basis::F, &[("(2,1)", 1)])).unwrap(),
            expr(Basis::M, &[("(2,1)", 1), ("(1,1,1)", 1)])
        );
        assert!(f_to_m(&expr(Basis::M, &[("(1)", 1)])).is_err());
        for a in enumerate_compositions(5) {
            let f = QSymExpr::basis_element(Basis::F, a);
            assert_eq!(m_to_f(&f_to_m(&f).unwrap()).unwrap(), f);
        }
    }

    #[test]
    fn expansions() {
        assert_eq!(
            expand_S_in_M(&c("(1,2)")),
            expr(Basis::M, &[("(1,2)", 1), ("(1,1,1)", 1)])
        );
        assert_eq!(
            expand_S_in_M(&c("(1,1,1,1)")),
            expr(Basis::M, &[("(1,1,1,1)", 1)])
        );
        assert_eq!(
            expand_S_in_M(&c("(2,1)")),
            expr(Basis::M, &[("(2,1)", 1), ("(1,1,1)", 1)])
        );
        assert_eq!(expand_S_in_F(&c("(1,2)")), expr(Basis::F, &[("(1,2)", 1)]));
        assert_eq!(
            expand_S_in_F(&c("(1,3)")),
            expr(Basis::F, &[("(1,3)", 1), ("(2,2)", 1)])
        );
        assert_eq!(
            expand_S_in_F(&c("(2,2)")),
            expr(Basis::F, &[("(2,2)", 1), ("(1,2,1)", 1)])
        );
        assert_eq!(expand_S_in_M(&c("()")), expr(Basis::M, &[("()", 1)]));
        assert_eq!(expand_S_in_M(&c("()")).to_string(), "1");
        assert_eq!(expand_S_in_F(&c("(1,3)")).to_string(), "F(1,3) + F(2,2)");
    }

    #[test]
    fn basis_consistency_and_bound() {
        for n in 0..=6 {
            for a in enumerate_compositions(n) {
                let m = expand_S_in_M(&a);
                assert_eq!(f_to_m(&expand_S_in_F(&a)).unwrap(), m, "{a}");
                if n <= 5 {
                    assert_eq!(expand_S_in_M_bounded(&a, n + 2), m);
                }
            }
        }
    }

    #[test]
    fn atoms_and_polys() {
        let g = WeakComposition::new(vec![1, 0, 2]);
        assert_eq!(
            demazure_atom(&g, 3).unwrap(),
            xp(3, &[&[1, 1, 1], &[1, 0, 2]])
        );
        assert_eq!(
            demazure_atom(&WeakComposition::new(vec![3, 0, 0]), 3).unwrap(),
            xp(3, &[&[3, 0, 0]])
        );
        assert!(demazure_atom(&g, 4).is_err());
        let s12 = qschur_poly(&c("(1,2)"), 3);
        assert_eq!(
            s12,
            xp(3, &[&[1, 2, 0], &[1, 1, 1], &[1, 0, 2], &[0, 1, 2]])
        );
        assert_eq!(qschur_poly(&c("(1,2)"), 2), xp(2, &[&[1, 2]]));
        assert!(qschur_poly(&c("(1,1,1)"), 2).is_zero());
        assert_eq!(
            xpoly_to_M(&s12).unwrap(),
            expr(Basis::M, &[("(1,2)", 1), ("(1,1,1)", 1)])
        );
    }

    #[test]
    fn polynomial_agreement() {
        for n in 0..=5 {
            for a in enumerate_compositions(n) {
                assert_eq!(to_poly(&expand_S_in_M(&a), 5), qschur_poly(&a, 5), "{a}");
            }
        }
    }

    #[test]
    fn xpoly_to_m_errors() {
        assert_eq!(
            xpoly_to_M(&XPoly::one(2)).unwrap(),
            expr(Basis::M, &[("()", 1)])
        );
        let p = &XPoly::variable(2, 0) - &XPoly::variable(2, 1);
        assert_eq!(
            xpoly_to_M(&p),
            Err(Error::NotQuasisymmetric {
                left: "x1".into(),
                right: "x2".into()
            })
        );
        let sq = &XPoly::variable(1, 0) * &XPoly::variable(1, 0);
        assert!(matches!(
            xpoly_to_M(&sq),
            Err(Error::InsufficientVariables { .. })
        ));
    }

    #[test]
    fn schur_functions() {
        assert_eq!(
            schur_in_S(&p("(2,1)")),
            expr(Basis::S, &[("(2,1)", 1), ("(1,2)", 1)])
        );
        assert_eq!(schur_in_S(&p("(2,2)")), expr(Basis::S, &[("(2,2)", 1)]));
        assert_eq!(
            schur_oracle_M(&p("(2,1)")),
            expr(Basis::M, &[("(2,1)", 1), ("(1,2)", 1), ("(1,1,1)", 2)])
        );
        assert_eq!(schur_oracle_M(&p("(1)")), expr(Basis::M, &[("(1)", 1)]));
        assert_eq!(schur_oracle_M(&p("()")), expr(Basis::M, &[("()", 1)]));
        for n in 1..=6 {
            for l in crate::combinatorics::enumerate_partitions(n) {
                let via_s = convert(&schur_in_S(&l), Basis::M).unwrap();
                assert_eq!(via_s, schur_oracle_M(&l), "{l}");
            }
        }
        assert_eq!(
            convert(&schur_in_S(&p("(2,1)")), Basis::F).unwrap(),
            expr(Basis::F, &[("(2,1)", 1), ("(1,2)", 1)])
        );
    }

    #[test]
    fn transition_matrices() {
        for n in 1..=3 {
            assert!(transition_matrix(Basis::F, n).unwrap().is_identity());
        }
        let m = transition_matrix(Basis::F, 4).unwrap();
        let mut expect = vec![vec![0i64; 8]; 8];
        for (i, row) in expect.iter_mut().enumerate() {
            row[i] = 1;
        }
        expect[2][3] = 1;
        expect[3][5] = 1;
        assert_eq!(m.entries, expect);
        for n in 1..=7 {
            for basis in [Basis::M, Basis::F] {
                assert!(transition_matrix(basis, n)
                    .unwrap()
                    .is_upper_unitriangular());
            }
        }
    }

    #[test]
    fn inversion() {
        for n in 0..=6 {
            for a in enumerate_compositions(n) {
                let s = QSymExpr::basis_element(Basis::S, a.clone());
                assert_eq!(express_in_S(&expand_S_in_F(&a)).unwrap(), s);
                assert_eq!(express_in_S(&expand_S_in_M(&a)).unwrap(), s);
            }
        }
        assert_eq!(
            express_in_S(&expr(Basis::F, &[("(1,3)", 1)])).unwrap(),
            expr(Basis::S, &[("(1,3)", 1), ("(2,2)", -1), ("(1,2,1)", 1)])
        );
        assert_eq!(
            express_in_S(&expr(Basis::M, &[("(1,1,1,1)", 1)])).unwrap(),
            expr(Basis::S, &[("(1,1,1,1)", 1)])
        );
    }

    #[test]
    fn corollary_forms() {
        for n in 1..=7 {
            for a in enumerate_compositions(n) {
                let s_m = expand_S_in_M(&a) == QSymExpr::basis_element(Basis::M, a.clone());
                let s_f = expand_S_in_F(&a) == QSymExpr::basis_element(Basis::F, a.clone());
                assert_eq!(s_m, is_m_form(&a), "{a}");
                assert_eq!(s_f, is_f_form(&a), "{a}");
            }
        }
    }

    #[test]
    fn display_and_json() {
        let e = QSymExpr::from_terms(
            Basis::M,
            [
                (c("(2,2)"), QtPoly::one_minus(0, 1)),
                (c("(1,3)"), QtPoly::one()),
                (c("(1,1,2)"), QtPoly::from_int(-2)),
            ],
        );
        assert_eq!(e.to_string(), "M(1,3) + (1 - t)M(2,2) - 2M(1,1,2)");
        let s = serde_json::to_string(&e).unwrap();
        assert!(s.starts_with(r#"{"basis":"M","terms":[{"composition":[1,3],"#));
        assert_eq!(serde_json::from_str::<QSymExpr>(&s).unwrap(), e);
        assert_eq!(QSymExpr::zero(Basis::S).to_string(), "0");
    }
}
