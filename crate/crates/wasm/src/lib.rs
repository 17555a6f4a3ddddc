//! Browser bindings. Every export takes plain strings and numbers and
//! returns a JSON string; errors come back as `{"error": "..."}`.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use qschur::insertion::skyline_insert;
use qschur::pieri::{pieri_col, pieri_row};
use qschur::qsym::{expand_S_in_F, expand_S_in_M, transition_matrix, Basis, QSymExpr};
use qschur::tableaux::Comt;
use qschur::Composition;

// keep the page responsive
const MAX_DEGREE: usize = 7;

fn respond(r: Result<Value, String>) -> String {
    match r {
        Ok(v) => v.to_string(),
        Err(e) => json!({ "error": e }).to_string(),
    }
}

fn comp(s: &str) -> Result<Composition, String> {
    s.parse().map_err(|e: qschur::Error| e.to_string())
}

fn basis(s: &str) -> Result<Basis, String> {
    match s.parse().map_err(|e: qschur::Error| e.to_string())? {
        Basis::S => Err("basis must be M or F".into()),
        b => Ok(b),
    }
}

fn terms(e: &QSymExpr) -> Value {
    e.terms()
        .into_iter()
        .map(|(a, c)| json!({ "composition": a.to_string(), "coeff": c.to_string() }))
        .collect()
}

pub fn matrix_json(b: &str, n: usize) -> Result<Value, String> {
    if n > MAX_DEGREE {
        return Err(format!("degree is capped at {MAX_DEGREE}"));
    }
    let m = transition_matrix(basis(b)?, n).map_err(|e| e.to_string())?;
    Ok(json!({
        "basis": m.basis.to_string(),
        "n": n,
        "index": m.index.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "entries": m.entries,
    }))
}

pub fn expand_json(b: &str, a: &str) -> Result<Value, String> {
    let a = comp(a)?;
    let e = match basis(b)? {
        Basis::M => expand_S_in_M(&a),
        _ => expand_S_in_F(&a),
    };
    Ok(json!({ "text": e.to_string(), "terms": terms(&e) }))
}

pub fn pieri_json(a: &str, k: usize, column: bool) -> Result<Value, String> {
    let a = comp(a)?;
    if a.size() + k > MAX_DEGREE + 2 {
        return Err("result degree too large for the demo".into());
    }
    let e = if column {
        pieri_col(&a, k)
    } else {
        pieri_row(&a, k)
    };
    Ok(json!({ "text": e.to_string(), "terms": terms(&e) }))
}

/// `rows` is a JSON array of rows, e.g. `[[1,1],[3,2,2,2]]`.
pub fn insert_json(rows: &str, k: usize) -> Result<Value, String> {
    let rows: Vec<Vec<usize>> = serde_json::from_str(rows).map_err(|e| e.to_string())?;
    let f = Comt::new(rows).map_err(|e| e.to_string())?;
    if k == 0 {
        return Err("entries are positive".into());
    }
    let ins = skyline_insert(&f, k);
    Ok(json!({
        "before": f.rows(),
        "after": ins.result.rows(),
        "path": ins.path.iter().map(|c| [c.row, c.col]).collect::<Vec<_>>(),
        "new_cell": [ins.new_cell.row, ins.new_cell.col],
        "text": ins.result.to_string(),
    }))
}

#[wasm_bindgen]
pub fn matrix(basis: &str, n: usize) -> String {
    respond(matrix_json(basis, n))
}

#[wasm_bindgen]
pub fn expand(basis: &str, comp: &str) -> String {
    respond(expand_json(basis, comp))
}

#[wasm_bindgen]
pub fn pieri(comp: &str, k: usize, column: bool) -> String {
    respond(pieri_json(comp, k, column))
}

#[wasm_bindgen]
pub fn insert(rows: &str, k: usize) -> String {
    respond(insert_json(rows, k))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exports() {
        let m: Value = serde_json::from_str(&matrix("F", 4)).unwrap();
        assert_eq!(m["index"].as_array().unwrap().len(), 8);
        assert_eq!(m["entries"][2][3], 1);
        let e: Value = serde_json::from_str(&expand("F", "(1,3)")).unwrap();
        assert_eq!(e["text"], "F(1,3) + F(2,2)");
        let p: Value = serde_json::from_str(&pieri("(1,3)", 1, false)).unwrap();
        assert_eq!(p["terms"].as_array().unwrap().len(), 4);
        let i: Value =
            serde_json::from_str(&insert("[[1,1],[3,2,2,2],[6,5,4],[7,4,3]]", 5)).unwrap();
        assert_eq!(i["path"], json!([[4, 3], [5, 3], [3, 2], [2, 1]]));
        let bad: Value = serde_json::from_str(&expand("F", "(1,x)")).unwrap();
        assert!(bad["error"].is_string());
        assert!(serde_json::from_str::<Value>(&matrix("S", 3)).unwrap()["error"].is_string());
    }
}
