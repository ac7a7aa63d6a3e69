//! WebAssembly bindings for the static demo page in `www/`.
//!
//! Every export returns a JSON string; the page parses it. The `*_json`
//! functions hold the logic and run natively in tests.

use rfsemi::rfmatrix::RowFactorizations;
use rfsemi::{classify_pf, enumerate_configs, lambda_table, NumericalSemigroup};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Matrices beyond this many are counted but not returned to the page.
const MATRIX_PAGE: usize = 48;

fn parse(gens: &str) -> Result<NumericalSemigroup, String> {
    gens.parse().map_err(|e: rfsemi::SemigroupError| e.to_string())
}

/// Invariants plus a membership strip over `0..=F + m` for drawing.
pub fn analyze_json(gens: &str) -> Result<String, String> {
    let s = parse(gens)?;
    let pf = s.pseudo_frobenius();
    let end = s.frobenius() + s.multiplicity();
    // 0 = element, 1 = gap, 2 = pseudo-Frobenius
    let strip: Vec<u8> = (0..=end.min(20_000))
        .map(|x| {
            if s.contains(x) {
                0
            } else if pf.binary_search(&x).is_ok() {
                2
            } else {
                1
            }
        })
        .collect();
    let e = s.embedding_dimension();
    let lambda = lambda_table(&s);
    let lambda_rows: Vec<Vec<Option<i64>>> = (0..e)
        .map(|i| (0..e).map(|j| (i != j).then(|| lambda.lambda(i, j))).collect())
        .collect();
    let classification = match classify_pf(&s) {
        Ok(c) => json!({
            "good": c.good.iter().map(|g| json!({
                "value": g.value,
                "witness": g.witness.render(s.generators()),
            })).collect::<Vec<_>>(),
            "bad": c.bad,
        }),
        Err(_) => Value::Null,
    };
    Ok(json!({
        "generators": s.generators(),
        "multiplicity": s.multiplicity(),
        "embedding_dimension": e,
        "frobenius": s.frobenius(),
        "genus": s.genus(),
        "pf": pf,
        "type": pf.len(),
        "symmetric": s.is_symmetric(),
        "almost_symmetric": s.is_almost_symmetric(),
        "strip": strip,
        "lambda": lambda_rows,
        "classification": classification,
    })
    .to_string())
}

/// RF-matrices of `f`, the first [`MATRIX_PAGE`] of them in full.
pub fn rf_json(gens: &str, f: i64, cap: usize) -> Result<String, String> {
    let s = parse(gens)?;
    let rows = RowFactorizations::compute(&s, f, cap).map_err(|e| e.to_string())?;
    let total = rows.matrix_count();
    let shown = rows
        .matrices(cap)
        .map(|ms| {
            ms.into_iter()
                .take(MATRIX_PAGE)
                .map(|m| m.entries().to_vec())
                .collect::<Vec<_>>()
        })
        .unwrap_or_else(|_| vec![rows.canonical().entries().to_vec()]);
    let config = rows.shared_configuration().map(|c| c.hex_id());
    Ok(json!({
        "target": f,
        "total": total.to_string(),
        "matrices": shown,
        "shared_configuration": config,
    })
    .to_string())
}

/// One page of admissible configurations of order `n`.
pub fn configs_json(n: usize, offset: usize, limit: usize) -> Result<String, String> {
    if n > 6 {
        return Err("the demo pages through orders 3 to 6 only".into());
    }
    let all = enumerate_configs(n).map_err(|e| e.to_string())?;
    let page: Vec<Value> = all
        .iter()
        .skip(offset)
        .take(limit)
        .map(|c| {
            let grid: Vec<Vec<char>> = c
                .grid()
                .lines()
                .map(|l| l.split(' ').map(|t| t.chars().next().unwrap()).collect())
                .collect();
            let witness = c
                .shared_positive_rows()
                .map(|w| json!([w.first_row, w.second_row, w.column]));
            json!({ "id": c.hex_id(), "grid": grid, "shared_rows": witness })
        })
        .collect();
    Ok(json!({ "order": n, "total": all.len(), "offset": offset, "configs": page }).to_string())
}

#[wasm_bindgen]
pub fn analyze(gens: &str) -> Result<String, JsValue> {
    analyze_json(gens).map_err(|e| JsValue::from_str(&e))
}

/// `f` arrives as a JS number; it must be a safe integer.
#[wasm_bindgen]
pub fn rf(gens: &str, f: f64, cap: usize) -> Result<String, JsValue> {
    if f.fract() != 0.0 || f.abs() > 9_007_199_254_740_991.0 {
        return Err(JsValue::from_str("f must be an integer"));
    }
    rf_json(gens, f as i64, cap).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn configs(n: usize, offset: usize, limit: usize) -> Result<String, JsValue> {
    configs_json(n, offset, limit).map_err(|e| JsValue::from_str(&e))
}
