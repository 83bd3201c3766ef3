//! Browser bindings. Every function takes JSON text and returns JSON text;
//! failures come back as `{"error": "..."}` so the page never sees a trap.

use primespec::construction;
use primespec::products;
use primespec::spectrum::Space;
use primespec::{CoefficientField, RingExpr, SpecSubset, Topology};
use serde_json::{json, Value};
use wasm_bindgen::prelude::wasm_bindgen;

fn respond(r: Result<Value, String>) -> String {
    r.unwrap_or_else(|e| json!({ "error": e })).to_string()
}

fn parse(ring: &str, set: &str) -> Result<(Space, SpecSubset), String> {
    let ring: RingExpr = serde_json::from_str(ring).map_err(|e| format!("ring: {e}"))?;
    let set: SpecSubset = serde_json::from_str(set).map_err(|e| format!("set: {e}"))?;
    let space = Space::new(&ring).map_err(|e| e.to_string())?;
    let set = space.canonical(&set).map_err(|e| e.to_string())?;
    Ok((space, set))
}

/// Closure of `set` in `topology` (`zariski`, `flat` or `patch`), with a
/// readable rendering alongside the JSON form.
#[wasm_bindgen]
pub fn closure(ring: &str, set: &str, topology: &str) -> String {
    respond((|| {
        let (space, e) = parse(ring, set)?;
        let t: Topology = topology.parse().map_err(|e: primespec::Error| e.to_string())?;
        let c = space.closure(&e, t).map_err(|e| e.to_string())?;
        Ok(json!({ "closure": c, "text": c.to_string(), "input": e.to_string() }))
    })())
}

/// Image of the spectrum of the product of quotients (`quotient`) or
/// localizations (`local`) at the points of `set`, with its closure.
#[wasm_bindgen]
pub fn image(ring: &str, set: &str, kind: &str) -> String {
    respond((|| {
        let (space, e) = parse(ring, set)?;
        let topology = match kind {
            "quotient" => Topology::Zariski,
            "local" => Topology::Flat,
            other => return Err(format!("unknown product kind `{other}`")),
        };
        let rep = products::strictness_demo(space.ring(), &e, topology).map_err(|e| e.to_string())?;
        let mut out = serde_json::to_value(&rep).map_err(|e| e.to_string())?;
        out["text"] = json!(format!(
            "image {}\nclosure {}{}",
            rep.image,
            rep.closure,
            rep.witness.as_ref().map(|w| format!("\nmissed {w}")).unwrap_or_default()
        ));
        Ok(out)
    })())
}

/// Structure report for `K[x_1..x_n]/(x_i x_k)` localized at the variables.
#[wasm_bindgen]
pub fn supplement(n: usize, field: &str) -> String {
    respond((|| {
        if n > 12 {
            return Err("n is capped at 12 in the browser".into());
        }
        let k = CoefficientField::parse_short(field).map_err(|e| e.to_string())?;
        let rep = construction::supplement_report(k, n, true).map_err(|e| e.to_string())?;
        serde_json::to_value(&rep).map_err(|e| e.to_string())
    })())
}
