//! Exact sparse polynomials.
//!
//! [`QtPoly`] is an element of `ℤ[q,t]`; [`XPoly`] is a polynomial in
//! `x_1..x_n` with [`QtPoly`] coefficients. Neither ever stores a zero
//! coefficient, so structural equality is mathematical equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A polynomial in `q` and `t` with arbitrary-precision integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QtPoly {
    // (q exponent, t exponent) -> coefficient
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl QtPoly {
    pub fn zero() -> Self {
        QtPoly::default()
    }

    pub fn one() -> Self {
        QtPoly::from_int(1)
    }

    pub fn from_int(c: i64) -> Self {
        QtPoly::monomial(0, 0, BigInt::from(c))
    }

    pub fn from_bigint(c: BigInt) -> Self {
        QtPoly::monomial(0, 0, c)
    }

    pub fn monomial(q_exp: u32, t_exp: u32, coeff: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert((q_exp, t_exp), coeff);
        }
        QtPoly { terms }
    }

    pub fn q() -> Self {
        QtPoly::monomial(1, 0, BigInt::one())
    }

    pub fn t() -> Self {
        QtPoly::monomial(0, 1, BigInt::one())
    }

    /// `1 - q^a t^b`.
    pub fn one_minus(q_exp: u32, t_exp: u32) -> Self {
        QtPoly::one() - QtPoly::monomial(q_exp, t_exp, BigInt::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).is_some_and(|c| c.is_one())
    }

    /// The value when the polynomial is a constant.
    pub fn as_integer(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&(0, 0)).cloned(),
            _ => None,
        }
    }

    pub fn as_i64(&self) -> Option<i64> {
        self.as_integer().and_then(|c| c.to_i64())
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &BigInt)> {
        self.terms.iter().map(|(&(a, b), c)| (a, b, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, q_exp: u32, t_exp: u32) -> BigInt {
        self.terms
            .get(&(q_exp, t_exp))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    fn add_term(&mut self, key: (u32, u32), c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(key).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn scale(&self, c: &BigInt) -> QtPoly {
        if c.is_zero() {
            return QtPoly::zero();
        }
        QtPoly {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> QtPoly {
        (0..e).fold(QtPoly::one(), |acc, _| &acc * self)
    }

    /// Substitutes integers for `q` and/or `t`; `None` leaves the variable alone.
    pub fn specialize(&self, q: Option<i64>, t: Option<i64>) -> QtPoly {
        let mut out = QtPoly::zero();
        for (&(a, b), c) in &self.terms {
            let mut c = c.clone();
            let mut key = (a, b);
            if let Some(qv) = q {
                c *= BigInt::from(qv).pow(a);
                key.0 = 0;
            }
            if let Some(tv) = t {
                c *= BigInt::from(tv).pow(b);
                key.1 = 0;
            }
            out.add_term(key, c);
        }
        out
    }

    pub fn evaluate(&self, q: i64, t: i64) -> BigInt {
        self.specialize(Some(q), Some(t))
            .as_integer()
            .expect("fully specialized polynomial is constant")
    }

    // Graded order with q above t; the leading term drives exact division.
    fn leading(&self) -> Option<((u32, u32), &BigInt)> {
        self.terms
            .iter()
            .max_by_key(|(&(a, b), _)| (a + b, a))
            .map(|(k, c)| (*k, c))
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves a
    /// remainder (or `divisor` is zero).
    pub fn div_exact(&self, divisor: &QtPoly) -> Option<QtPoly> {
        let (dk, dc) = divisor.leading()?;
        let mut rem = self.clone();
        let mut quot = QtPoly::zero();
        while let Some((rk, rc)) = rem.leading() {
            if rk.0 < dk.0 || rk.1 < dk.1 {
                return None;
            }
            let (qc, r) = num_integer::Integer::div_rem(rc, dc);
            if !r.is_zero() {
                return None;
            }
            let step = QtPoly::monomial(rk.0 - dk.0, rk.1 - dk.1, qc);
            rem = &rem - &(&step * divisor);
            quot = &quot + &step;
        }
        Some(quot)
    }
}

impl Add for &QtPoly {
    type Output = QtPoly;
    fn add(self, rhs: &QtPoly) -> QtPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for QtPoly {
    type Output = QtPoly;
    fn add(mut self, rhs: QtPoly) -> QtPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&QtPoly> for QtPoly {
    fn add_assign(&mut self, rhs: &QtPoly) {
        for (&k, c) in &rhs.terms {
            self.add_term(k, c.clone());
        }
    }
}

impl SubAssign<&QtPoly> for QtPoly {
    fn sub_assign(&mut self, rhs: &QtPoly) {
        for (&k, c) in &rhs.terms {
            self.add_term(k, -c.clone());
        }
    }
}

impl Sub for &QtPoly {
    type Output = QtPoly;
    fn sub(self, rhs: &QtPoly) -> QtPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for QtPoly {
    type Output = QtPoly;
    fn sub(mut self, rhs: QtPoly) -> QtPoly {
        self -= &rhs;
        self
    }
}

impl Neg for &QtPoly {
    type Output = QtPoly;
    fn neg(self) -> QtPoly {
        QtPoly {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

impl Neg for QtPoly {
    type Output = QtPoly;
    fn neg(self) -> QtPoly {
        -&self
    }
}

impl Mul for &QtPoly {
    type Output = QtPoly;
    fn mul(self, rhs: &QtPoly) -> QtPoly {
        let mut out = QtPoly::zero();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &rhs.terms {
                out.add_term((a1 + a2, b1 + b2), c1 * c2);
            }
        }
        out
    }
}

impl Mul for QtPoly {
    type Output = QtPoly;
    fn mul(self, rhs: QtPoly) -> QtPoly {
        &self * &rhs
    }
}

impl From<i64> for QtPoly {
    fn from(c: i64) -> Self {
        QtPoly::from_int(c)
    }
}

fn write_power(f: &mut fmt::Formatter<'_>, var: &str, e: u32) -> fmt::Result {
    match e {
        0 => Ok(()),
        1 => write!(f, "{var}"),
        _ => write!(f, "{var}^{e}"),
    }
}

impl QtPoly {
    fn sorted_terms(&self) -> Vec<((u32, u32), &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().map(|(k, c)| (*k, c)).collect();
        v.sort_by_key(|((a, b), _)| (a + b, *a));
        v
    }

    /// True when the printed form needs parentheses as a coefficient.
    pub(crate) fn is_compound(&self) -> bool {
        self.terms.len() > 1
    }
}

impl fmt::Display for QtPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, ((a, b), c)) in self.sorted_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let constant = a == 0 && b == 0;
            if constant || !abs.is_one() {
                write!(f, "{abs}")?;
            }
            write_power(f, "q", a)?;
            write_power(f, "t", b)?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct CoeffTerm {
    q: u32,
    t: u32,
    value: CoeffValue,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum CoeffValue {
    Small(i64),
    Big(String),
}

impl Serialize for QtPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for ((a, b), c) in self.sorted_terms() {
            let value = match c.to_i64() {
                Some(v) => CoeffValue::Small(v),
                None => CoeffValue::Big(c.to_string()),
            };
            seq.serialize_element(&CoeffTerm { q: a, t: b, value })?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for QtPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw: Vec<CoeffTerm> = Vec::deserialize(deserializer)?;
        let mut out = QtPoly::zero();
        for term in raw {
            let c = match term.value {
                CoeffValue::Small(v) => BigInt::from(v),
                CoeffValue::Big(s) => s.parse().map_err(serde::de::Error::custom)?,
            };
            out.add_term((term.q, term.t), c);
        }
        Ok(out)
    }
}

/// A polynomial in `x_1..x_n` with coefficients in `ℤ[q,t]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct XPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, QtPoly>,
}

impl XPoly {
    pub fn zero(nvars: usize) -> Self {
        XPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        XPoly::constant(nvars, QtPoly::one())
    }

    pub fn constant(nvars: usize, c: QtPoly) -> Self {
        let mut p = XPoly::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    /// `coeff * x^exps`. Panics when `exps` has the wrong length.
    pub fn monomial(exps: Vec<u32>, coeff: QtPoly) -> Self {
        let mut p = XPoly::zero(exps.len());
        p.add_term(exps, coeff);
        p
    }

    pub fn variable(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        XPoly::monomial(e, QtPoly::one())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
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

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &QtPoly)> {
        self.terms.iter().map(|(k, v)| (k.as_slice(), v))
    }

    pub fn coeff(&self, exps: &[u32]) -> QtPoly {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: QtPoly) {
        assert_eq!(exps.len(), self.nvars, "exponent vector length");
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exps) {
            Some(existing) => {
                *existing += &c;
                if existing.is_zero() {
                    self.terms.remove(&exps);
                }
            }
            None => {
                self.terms.insert(exps, c);
            }
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &QtPoly) -> XPoly {
        let mut out = XPoly::zero(self.nvars);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), v * c);
        }
        out
    }

    pub fn map_coeffs(&self, f: impl Fn(&QtPoly) -> QtPoly) -> XPoly {
        let mut out = XPoly::zero(self.nvars);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), f(v));
        }
        out
    }

    pub fn specialize(&self, q: Option<i64>, t: Option<i64>) -> XPoly {
        self.map_coeffs(|c| c.specialize(q, t))
    }

    /// Exchanges `x_i` and `x_j` (0-indexed).
    pub fn swap_vars(&self, i: usize, j: usize) -> XPoly {
        let mut out = XPoly::zero(self.nvars);
        for (e, v) in &self.terms {
            let mut e = e.clone();
            e.swap(i, j);
            out.add_term(e, v.clone());
        }
        out
    }

    /// Invariance under every adjacent transposition.
    pub fn is_symmetric(&self) -> bool {
        (0..self.nvars.saturating_sub(1)).all(|i| &self.swap_vars(i, i + 1) == self)
    }

    /// Relabels variables by `perm`: `x_i` becomes `x_{perm[i]}`.
    pub fn permute_vars(&self, perm: &[usize]) -> XPoly {
        let mut out = XPoly::zero(self.nvars);
        for (e, v) in &self.terms {
            let mut ne = vec![0; self.nvars];
            for (i, &p) in perm.iter().enumerate() {
                ne[p] = e[i];
            }
            out.add_term(ne, v.clone());
        }
        out
    }

    fn leading(&self) -> Option<(&Vec<u32>, &QtPoly)> {
        self.terms.iter().next_back()
    }

    /// Exact quotient in lexicographic order. The divisor's leading
    /// coefficient must be `±1`; otherwise, or when a remainder is left,
    /// returns `None`.
    pub fn div_exact(&self, divisor: &XPoly) -> Option<XPoly> {
        assert_eq!(self.nvars, divisor.nvars);
        let (dexp, dcoeff) = divisor.leading()?;
        let sign = dcoeff.as_integer().filter(|c| c.abs().is_one())?;
        let mut rem = self.clone();
        let mut quot = XPoly::zero(self.nvars);
        while let Some((rexp, rcoeff)) = rem.leading() {
            if rexp.iter().zip(dexp).any(|(a, b)| a < b) {
                return None;
            }
            let e: Vec<u32> = rexp.iter().zip(dexp).map(|(a, b)| a - b).collect();
            let c = rcoeff.scale(&sign);
            let step = XPoly::monomial(e, c);
            rem = &rem - &(&step * divisor);
            quot = &quot + &step;
        }
        Some(quot)
    }
}

impl Add for &XPoly {
    type Output = XPoly;
    fn add(self, rhs: &XPoly) -> XPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&XPoly> for XPoly {
    fn add_assign(&mut self, rhs: &XPoly) {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        for (e, v) in &rhs.terms {
            self.add_term(e.clone(), v.clone());
        }
    }
}

impl Sub for &XPoly {
    type Output = XPoly;
    fn sub(self, rhs: &XPoly) -> XPoly {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (e, v) in &rhs.terms {
            out.add_term(e.clone(), -v);
        }
        out
    }
}

impl Mul for &XPoly {
    type Output = XPoly;
    fn mul(self, rhs: &XPoly) -> XPoly {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = XPoly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let is_const_mono = e.iter().all(|&x| x == 0);
            let mut coeff_str = String::new();
            let neg = !c.is_compound() && c.terms().next().is_some_and(|(_, _, v)| v.is_negative());
            let shown = if neg { -c } else { c.clone() };
            if shown.is_compound() {
                coeff_str = format!("({shown})");
            } else if !shown.is_one() || is_const_mono {
                coeff_str = shown.to_string();
            }
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            write!(f, "{coeff_str}")?;
            let mut first = coeff_str.is_empty();
            for (v, &x) in e.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                write_power(f, &format!("x{}", v + 1), x)?;
            }
        }
        Ok(())
    }
}

/// `x1*x3^2` style rendering of an exponent vector; `1` when constant.
pub fn monomial_string(exps: &[u32]) -> String {
    let parts: Vec<String> = exps
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| match e {
            1 => format!("x{}", i + 1),
            _ => format!("x{}^{e}", i + 1),
        })
        .collect();
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

#[derive(Serialize, Deserialize)]
struct XTerm {
    exponents: Vec<u32>,
    coeff: QtPoly,
}

#[derive(Serialize, Deserialize)]
struct XRepr {
    nvars: usize,
    terms: Vec<XTerm>,
}

impl Serialize for XPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        XRepr {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .rev()
                .map(|(e, c)| XTerm {
                    exponents: e.clone(),
                    coeff: c.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for XPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = XRepr::deserialize(d)?;
        let mut p = XPoly::zero(r.nvars);
        for t in r.terms {
            if t.exponents.len() != r.nvars {
                return Err(serde::de::Error::custom(
                    "exponent vector length differs from nvars",
                ));
            }
            p.add_term(t.exponents, t.coeff);
        }
        Ok(p)
    }
}
