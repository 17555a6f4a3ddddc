//! Reference computations that do not go through fillings or tableaux.

#![allow(non_snake_case)]

use itertools::Itertools;

use crate::combinatorics::Partition;
use crate::error::{Error, Result};
use crate::poly::{QtPoly, XPoly};

fn sign(perm: &[usize]) -> i64 {
    let inversions = (0..perm.len())
        .array_combinations()
        .filter(|&[i, j]| perm[i] > perm[j])
        .count();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `[k]_t! = Π_{i=1..k} (1 + t + ... + t^(i-1))`
fn t_factorial(k: usize) -> QtPoly {
    (1..=k).fold(QtPoly::one(), |acc, i| {
        let mut qi = QtPoly::zero();
        for e in 0..i as u32 {
            qi += &QtPoly::monomial(0, e, 1.into());
        }
        &acc * &qi
    })
}

/// Hall-Littlewood `P_l(x_1..x_n; t)` from the symmetrization formula
/// `(1/v_l(t)) Σ_w w(x^l Π_{i<j} (x_i - t x_j) / (x_i - x_j))`.
///
/// The alternating sum of `x^l Π (x_i - t x_j)` is divided exactly by the
/// Vandermonde product, and then every coefficient by `v_l(t)`, where the
/// multiplicity of the part 0 counts too.
pub fn hall_littlewood_P_oracle(l: &Partition, n: usize) -> Result<XPoly> {
    if n < l.len() {
        return Err(Error::InsufficientVariables {
            needed: l.len(),
            available: n,
        });
    }
    if n == 0 {
        return Ok(XPoly::one(0));
    }
    let lam: Vec<u32> = (0..n).map(|i| l.part(i) as u32).collect();
    let x = |i: usize| XPoly::variable(n, i);
    let t = XPoly::constant(n, QtPoly::t());
    let mut numer = XPoly::monomial(lam.clone(), QtPoly::one());
    let mut vander = XPoly::one(n);
    for [i, j] in (0..n).array_combinations() {
        numer = &numer * &(&x(i) - &(&t * &x(j)));
        vander = &vander * &(&x(i) - &x(j));
    }
    let mut alt = XPoly::zero(n);
    for perm in (0..n).permutations(n) {
        alt += &numer
            .permute_vars(&perm)
            .scale(&QtPoly::from_int(sign(&perm)));
    }
    let sym = alt
        .div_exact(&vander)
        .ok_or_else(|| Error::invalid("oracle", "alternant not divisible by the Vandermonde"))?;
    let mut v = QtPoly::one();
    let mut mult = std::collections::BTreeMap::new();
    for &p in &lam {
        *mult.entry(p).or_insert(0usize) += 1;
    }
    for &m in mult.values() {
        v = &v * &t_factorial(m);
    }
    let mut out = XPoly::zero(n);
    for (e, c) in sym.terms() {
        let q = c
            .div_exact(&v)
            .ok_or_else(|| Error::invalid("oracle", format!("{c} is not divisible by {v}")))?;
        out.add_term(e.to_vec(), q);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        // P_(1) = x1 + x2, P_(1,1) = x1 x2
        let p = hall_littlewood_P_oracle(&"(1)".parse().unwrap(), 2).unwrap();
        assert_eq!(p, &XPoly::variable(2, 0) + &XPoly::variable(2, 1));
        let p = hall_littlewood_P_oracle(&"(1,1)".parse().unwrap(), 2).unwrap();
        assert_eq!(p, XPoly::monomial(vec![1, 1], QtPoly::one()));
        // P_(2)(x1,x2) = x1^2 + x2^2 + (1 - t) x1 x2
        let p = hall_littlewood_P_oracle(&"(2)".parse().unwrap(), 2).unwrap();
        assert_eq!(p.coeff(&[1, 1]), QtPoly::one_minus(0, 1));
        assert_eq!(p.coeff(&[2, 0]), QtPoly::one());
        assert!(hall_littlewood_P_oracle(&"(1,1)".parse().unwrap(), 1).is_err());
    }
}
