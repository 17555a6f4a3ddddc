//! Named property suites run exhaustively up to a size bound. Objects are
//! visited in increasing size, so the first failure recorded for a property
//! is a smallest counterexample.

use serde::Serialize;
use serde_json::{json, Value};

use crate::combinatorics::{
    enumerate_compositions, enumerate_partitions, enumerate_weak_compositions, Composition,
    Partition, WeakComposition,
};
use crate::error::{Error, Result};
use crate::insertion::{
    augmented_row_uniqueness_check, commutation_check, row_bumping_check, schensted_insert,
    schensted_uninsert, skyline_insert, skyline_uninsert,
};
use crate::macdonald::{
    hall_littlewood_P, integral_form, j_fundamental, l_alpha, l_alpha_M, ns_hall_littlewood,
};
use crate::oracle::hall_littlewood_P_oracle;
use crate::pieri::{pieri_col, pieri_row, product_S};
use crate::poly::XPoly;
use crate::qsym::{
    demazure_atom, expand_S_in_F, expand_S_in_M, express_in_S, f_to_m, is_f_form, is_m_form,
    monomial_qsym_poly, qschur_poly, to_poly, transition_matrix, Basis, QSymExpr,
};
use crate::tableaux::{
    comt_to_ssaf, enumerate_comts, enumerate_reversetableaux, enumerate_ssafs, is_ssaf, rho,
    rho_inverse, ssaf_to_comt, Basement,
};

pub const SUITES: &[&str] = &[
    "bijection",
    "insertion",
    "pieri",
    "transition",
    "corollary",
    "hall-littlewood",
    "macdonald",
];

#[derive(Clone, Debug, Serialize)]
pub struct Counterexample {
    pub input: Value,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct PropertyResult {
    pub name: String,
    pub checked: usize,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub max_size: usize,
    pub properties: Vec<PropertyResult>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.properties.iter().all(|p| p.passed)
    }
}

struct Prop {
    name: &'static str,
    checked: usize,
    cx: Option<Counterexample>,
}

impl Prop {
    fn new(name: &'static str) -> Self {
        Prop {
            name,
            checked: 0,
            cx: None,
        }
    }

    fn check(&mut self, ok: bool, input: impl FnOnce() -> Value, detail: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.cx.is_none() {
            self.cx = Some(Counterexample {
                input: input(),
                detail: detail(),
            });
        }
    }

    fn error(&mut self, input: Value, e: Error) {
        self.check(false, || input, || e.to_string());
    }

    fn finish(self) -> PropertyResult {
        PropertyResult {
            name: self.name.to_string(),
            checked: self.checked,
            passed: self.cx.is_none(),
            counterexample: self.cx,
        }
    }
}

/// Runs one suite; `max_size` bounds the number of cells (and the degree).
pub fn run_suite(name: &str, max_size: usize) -> Result<SuiteReport> {
    let props = match name {
        "bijection" => bijection(max_size),
        "insertion" => insertion(max_size),
        "pieri" => pieri(max_size),
        "transition" => transition(max_size),
        "corollary" => corollary(max_size),
        "hall-littlewood" => hall_littlewood(max_size),
        "macdonald" => macdonald(max_size),
        _ => {
            return Err(Error::Parse {
                what: "suite name",
                input: name.to_string(),
            })
        }
    };
    Ok(SuiteReport {
        suite: name.to_string(),
        max_size,
        properties: props.into_iter().map(Prop::finish).collect(),
    })
}

fn trim(w: WeakComposition) -> Vec<usize> {
    let mut v = w.parts().to_vec();
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn bijection(m: usize) -> Vec<Prop> {
    let mut comt_ssaf = Prop::new("comt-ssaf round trip");
    let mut ssaf_comt = Prop::new("ssaf-comt round trip");
    let mut rho_rt = Prop::new("rho after rho-inverse");
    let mut rho_ssaf = Prop::new("rho-inverse after rho");
    for size in 0..=m {
        for a in enumerate_compositions(size) {
            for t in enumerate_comts(&a, m + 1) {
                let f = comt_to_ssaf(&t);
                let ok = is_ssaf(f.rows())
                    && ssaf_to_comt(&f) == t
                    && trim(f.weight()) == trim(t.weight());
                comt_ssaf.check(ok, || json!(t), || format!("image {f}"));
            }
        }
        for n in 1..=m {
            for g in enumerate_weak_compositions(size, n) {
                for f in enumerate_ssafs(&g) {
                    let t = ssaf_to_comt(&f);
                    let back = comt_to_ssaf(&t).padded(n);
                    ssaf_comt.check(back.as_ref() == Ok(&f), || json!(f), || format!("comt {t}"));
                    let r = rho(&f);
                    let back = rho_inverse(&r).padded(n);
                    let ok = back.as_ref() == Ok(&f) && trim(r.weight()) == trim(f.weight());
                    rho_ssaf.check(ok, || json!(f), || format!("rho {r}"));
                }
            }
        }
        for l in enumerate_partitions(size) {
            for t in enumerate_reversetableaux(&l, m + 1) {
                let f = rho_inverse(&t);
                let ok = is_ssaf(f.rows()) && rho(&f) == t;
                rho_rt.check(ok, || json!(t), || format!("rho-inverse {f}"));
            }
        }
    }
    vec![comt_ssaf, ssaf_comt, rho_rt, rho_ssaf]
}

fn insertion(m: usize) -> Vec<Prop> {
    let mut bump = Prop::new("row bumping lemma");
    let mut sch_inv = Prop::new("schensted uninsertion");
    let mut comm = Prop::new("rho commutes with insertion");
    let mut unique = Prop::new("augmented row is the lowest of its length");
    let mut sky_inv = Prop::new("skyline uninsertion");
    for size in 0..=m {
        for l in enumerate_partitions(size) {
            for t in enumerate_reversetableaux(&l, m) {
                for x in 1..=m + 1 {
                    let ins = schensted_insert(&t, x);
                    let back = schensted_uninsert(&ins.result, ins.new_cell.row);
                    sch_inv.check(
                        back.as_ref() == Ok(&(t.clone(), x)),
                        || json!({"tableau": t, "x": x}),
                        || format!("{back:?}"),
                    );
                    for x2 in 1..=m + 1 {
                        bump.check(
                            row_bumping_check(&t, x, x2),
                            || json!({"tableau": t, "x": x, "x2": x2}),
                            String::new,
                        );
                    }
                }
            }
        }
        for a in enumerate_compositions(size) {
            for f in enumerate_comts(&a, m + 1) {
                for k in 1..=m + 2 {
                    let input = || json!({"comt": f, "k": k});
                    comm.check(commutation_check(&f, k), input, String::new);
                    unique.check(augmented_row_uniqueness_check(&f, k), input, String::new);
                    let ins = skyline_insert(&f, k);
                    let l = ins.result.rows()[ins.augmented_row - 1].len();
                    let back = skyline_uninsert(&ins.result, l);
                    sky_inv.check(back.as_ref() == Ok(&(f.clone(), k)), input, || {
                        format!("{back:?}")
                    });
                }
            }
        }
    }
    vec![bump, sch_inv, comm, unique, sky_inv]
}

fn pieri(m: usize) -> Vec<Prop> {
    let mut row = Prop::new("pieri row rule equals product");
    let mut col = Prop::new("pieri column rule equals product");
    for size in 0..=m {
        for a in enumerate_compositions(size) {
            for n in 1..=3 {
                let input = || json!({"composition": a, "n": n});
                match product_S(&Composition::new(vec![n]).expect("n > 0"), &a) {
                    Ok(p) => {
                        let r = pieri_row(&a, n);
                        row.check(r == p, input, || format!("rule {r}, product {p}"));
                    }
                    Err(e) => row.error(input(), e),
                }
                match product_S(&Composition::ones(n), &a) {
                    Ok(p) => {
                        let c = pieri_col(&a, n);
                        col.check(c == p, input, || format!("rule {c}, product {p}"));
                    }
                    Err(e) => col.error(input(), e),
                }
            }
        }
    }
    vec![row, col]
}

fn transition(m: usize) -> Vec<Prop> {
    let mut tri = Prop::new("transition matrices are upper unitriangular");
    let mut inv = Prop::new("re-expansion in S recovers S_a");
    let mut mf = Prop::new("M and F expansions agree");
    let mut poly = Prop::new("S_a agrees with its polynomial in |a| variables");
    for n in 1..=m {
        for basis in [Basis::M, Basis::F] {
            let input = || json!({"basis": basis.to_string(), "n": n});
            match transition_matrix(basis, n) {
                Ok(t) => tri.check(t.is_upper_unitriangular(), input, || t.to_string()),
                Err(e) => tri.error(input(), e),
            }
        }
        for a in enumerate_compositions(n) {
            let e_f = expand_S_in_F(&a);
            let e_m = expand_S_in_M(&a);
            let back = express_in_S(&e_f);
            let expect = QSymExpr::basis_element(Basis::S, a.clone());
            inv.check(
                back.as_ref() == Ok(&expect),
                || json!(a),
                || format!("{back:?}"),
            );
            let conv = f_to_m(&e_f);
            mf.check(
                conv.as_ref() == Ok(&e_m),
                || json!(a),
                || format!("{e_f} vs {e_m}"),
            );
            if n <= 5 {
                poly.check(
                    to_poly(&e_m, n) == qschur_poly(&a, n),
                    || json!(a),
                    String::new,
                );
            }
        }
    }
    vec![tri, inv, mf, poly]
}

fn corollary(m: usize) -> Vec<Prop> {
    let mut mform = Prop::new("S_a = M_a exactly for the M-form");
    let mut fform = Prop::new("S_a = F_a exactly for the F-form");
    for n in 1..=m {
        for a in enumerate_compositions(n) {
            let s_m = expand_S_in_M(&a) == QSymExpr::basis_element(Basis::M, a.clone());
            let s_f = expand_S_in_F(&a) == QSymExpr::basis_element(Basis::F, a.clone());
            mform.check(
                s_m == is_m_form(&a),
                || json!(a),
                || format!("S_a = M_a is {s_m}"),
            );
            fform.check(
                s_f == is_f_form(&a),
                || json!(a),
                || format!("S_a = F_a is {s_f}"),
            );
        }
    }
    vec![mform, fform]
}

fn hall_littlewood(m: usize) -> Vec<Prop> {
    let mut t0 = Prop::new("L_a at t=0 is S_a");
    let mut t1 = Prop::new("L_a at t=1 is M_a");
    let mut qs = Prop::new("L_a is quasisymmetric");
    let mut sym = Prop::new("sum over rearrangements is symmetric");
    let mut oracle = Prop::new("P_l equals the symmetrization oracle");
    for size in 0..=m {
        let n = size + 1;
        for a in enumerate_compositions(size) {
            let input = || json!({"composition": a, "n": n});
            match l_alpha(&a, n) {
                Ok(l) => {
                    t0.check(
                        l.specialize(None, Some(0)) == qschur_poly(&a, n),
                        input,
                        String::new,
                    );
                    t1.check(
                        l.specialize(None, Some(1)) == monomial_qsym_poly(&a, n),
                        input,
                        String::new,
                    );
                }
                Err(e) => t0.error(input(), e),
            }
            if let Err(e) = l_alpha_M(&a, n) {
                qs.error(input(), e);
            } else {
                qs.check(true, input, String::new);
            }
        }
        for l in enumerate_partitions(size) {
            for n in l.len().max(1)..=(size + 1).min(4) {
                let input = || json!({"partition": l, "n": n});
                match hall_littlewood_P(&l, n) {
                    Ok(p) => {
                        sym.check(p.is_symmetric(), input, || p.to_string());
                        if n <= 3 {
                            let o = hall_littlewood_P_oracle(&l, n);
                            oracle.check(o.as_ref() == Ok(&p), input, || format!("{o:?}"));
                        }
                    }
                    Err(e) => sym.error(input(), e),
                }
            }
        }
    }
    vec![t0, t1, qs, sym, oracle]
}

fn schur_poly(l: &Partition, n: usize) -> XPoly {
    let mut p = XPoly::zero(n);
    for a in l.rearrangements() {
        p += &qschur_poly(&a, n);
    }
    p
}

fn macdonald(m: usize) -> Vec<Prop> {
    let mut atoms = Prop::new("identity basement at q=t=0 gives atoms");
    let mut schur = Prop::new("constant basement at q=t=0 gives Schur polynomials");
    let mut hl = Prop::new("E_g(t) is the integral form at q=0");
    let mut jf = Prop::new("fundamental expansion of J equals the integral form");
    for size in 0..=m {
        for n in 1..=m.min(4) {
            for g in enumerate_weak_compositions(size, n) {
                let input = || json!({"shape": g, "n": n});
                let e = integral_form(&g, Basement::Identity, n).expect("length n");
                let a = demazure_atom(&g, n).expect("length n");
                atoms.check(e.specialize(Some(0), Some(0)) == a, input, String::new);
                let j = integral_form(&g, Basement::Constant, n).expect("length n");
                let s = schur_poly(&g.to_partition(), n);
                schur.check(j.specialize(Some(0), Some(0)) == s, input, String::new);
                let h = ns_hall_littlewood(&g, n).expect("length n");
                hl.check(h == e.specialize(Some(0), None), input, String::new);
            }
        }
        if size <= 4 {
            for l in enumerate_partitions(size) {
                let n = size.max(1);
                let input = || json!({"partition": l, "n": n});
                let shape = {
                    let mut p = l.parts().to_vec();
                    p.resize(n, 0);
                    WeakComposition::new(p)
                };
                match j_fundamental(&l, n) {
                    Ok(f) => {
                        let j = integral_form(&shape, Basement::Constant, n).expect("length n");
                        jf.check(to_poly(&f, n) == j, input, || f.to_string());
                    }
                    Err(e) => jf.error(input(), e),
                }
            }
        }
    }
    vec![atoms, schur, hl, jf]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_suites_pass_small() {
        for s in SUITES {
            let r = run_suite(s, 3).unwrap();
            assert!(r.passed(), "{}", serde_json::to_string_pretty(&r).unwrap());
            assert!(r.properties.iter().all(|p| p.checked > 0), "{s}");
        }
        assert!(run_suite("nope", 3).is_err());
    }
}
