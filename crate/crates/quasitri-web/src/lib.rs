//! Browser bindings. Every export returns a JSON string; failures come back
//! as `{"error": "..."}` so the page has a single code path.

use quasitri::assembly::{census_entry, census_keys, glue_tori, verify_census_entry};
use quasitri::charfun::{enumerate, lens_parameters, Bounds, Polygon};
use quasitri::recognition::ReductionOptions;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

fn respond(r: quasitri::Result<Value>) -> String {
    match r {
        Ok(v) => v.to_string(),
        Err(e) => json!({ "error": e.to_string() }).to_string(),
    }
}

/// Census keys in table order.
#[wasm_bindgen]
pub fn keys() -> String {
    json!(census_keys()).to_string()
}

/// Solutions for `polygon` with `k` and `l` in `lo..=hi`, each with its
/// vectors and the lens parameters of every non-adjacent sector.
#[wasm_bindgen]
pub fn characteristic_pairs(polygon: &str, lo: i32, hi: i32, complete_only: bool) -> String {
    respond(pairs(polygon, lo.into(), hi.into(), complete_only))
}

fn pairs(polygon: &str, lo: i64, hi: i64, complete_only: bool) -> quasitri::Result<Value> {
    let p: Polygon = polygon.parse()?;
    let mut b = Bounds::default_for(p);
    b.k = lo.min(hi)..=hi.max(lo);
    b.l = b.k.clone();
    let mut out = Vec::new();
    for s in enumerate(p, &b)
        .into_iter()
        .filter(|s| s.complete || !complete_only)
    {
        let v = &s.pair.vectors;
        let m = v.len();
        let mut sectors = Vec::new();
        for i in 0..m {
            for j in i + 2..m {
                if (i, j) != (0, m - 1) {
                    sectors.push(json!({ "i": i + 1, "j": j + 1, "lens": lens_parameters(v[i], v[j])?.to_string() }));
                }
            }
        }
        out.push(json!({ "k": s.k, "l": s.l, "params": s.params, "vectors": v, "complete": s.complete, "sectors": sectors }));
    }
    Ok(Value::Array(out))
}

/// Builds one census entry and checks it: vertex count, homology, links
/// and sector lens spaces.
#[wasm_bindgen]
pub fn verify_census(key: &str, seed: u32) -> String {
    respond(census(key, seed.into()))
}

fn census(key: &str, seed: u64) -> quasitri::Result<Value> {
    let e = census_entry(key)?;
    let r = verify_census_entry(
        e,
        ReductionOptions {
            seed,
            ..ReductionOptions::default()
        },
    )?;
    let sectors: Vec<Value> = r
        .sectors
        .iter()
        .map(|s| {
            json!({ "i": s.i, "j": s.j, "lens": s.lens.to_string(), "h1_order": s.h1_order,
                    "identified": s.identified, "consistent": s.consistent() })
        })
        .collect();
    Ok(json!({
        "key": r.key,
        "tori": e.tori.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
        "vectors": e.vectors(),
        "f_vector": r.manifold.f_vector,
        "expected_f0": r.expected_f0,
        "euler": r.manifold.euler,
        "homology": r.manifold.homology.to_string(),
        "links": r.manifold.links.len(),
        "uncertified": r.manifold.uncertified().len(),
        "failed": r.manifold.failed().len(),
        "sectors": sectors,
        "realizes_data": r.realizes_data,
        "note": r.note,
        "passes": r.passes(false),
    }))
}

/// Glues two catalog tori, e.g. `"T4,0"` and `"T9,0"`.
#[wasm_bindgen]
pub fn glue(a: &str, b: &str) -> String {
    respond(glued(a, b))
}

fn glued(a: &str, b: &str) -> quasitri::Result<Value> {
    let r = glue_tori(a.trim().parse()?, b.trim().parse()?)?;
    Ok(json!({
        "a": r.a, "b": r.b,
        "f_vector": r.complex.f_vector(),
        "homology": r.homology.to_string(),
        "orientable": r.orientable,
        "identified": r.identified,
        "predicted_order": r.predicted_order,
    }))
}
