//! Browser bindings. Each export takes the field as `(p, n)` and returns the
//! same JSON envelope the CLI prints with `--format json`.

use fixedfield::fixed::EXHAUSTIVE_INVARIANCE_MAX_Q;
use fixedfield::record::{applicable_methods, fk_envelope, generator_envelope, group_envelope, Envelope};
use fixedfield::{build_report_with, Field, Method};
use wasm_bindgen::prelude::*;

/// Largest q the page accepts; beyond this the direct sum gets slow in a tab.
pub const MAX_Q: u32 = 16;

fn field(p: u32, n: u32) -> Result<Field, String> {
    let f = Field::new(p as u64, n, None).map_err(|e| e.to_string())?;
    if f.q() > MAX_Q {
        return Err(format!("q = {} is above the demo limit of {MAX_Q}", f.q()));
    }
    Ok(f)
}

fn parse_method(s: &str) -> Result<Option<Method>, String> {
    match s {
        "direct" => Ok(Some(Method::Direct)),
        "factored" => Ok(Some(Method::Factored)),
        "closed" => Ok(Some(Method::ClosedForm)),
        "all" => Ok(None),
        other => Err(format!("unknown method {other:?}")),
    }
}

fn to_json(env: &Envelope) -> String {
    serde_json::to_string(env).expect("serializable")
}

pub fn generator_json(p: u32, n: u32, method: &str) -> Result<String, String> {
    let f = field(p, n)?;
    let (m, compare) = match parse_method(method)? {
        Some(Method::ClosedForm) => (Method::ClosedForm, vec![Method::Direct]),
        Some(m) => (m, vec![Method::ClosedForm]),
        None => (Method::ClosedForm, vec![Method::Direct, Method::Factored]),
    };
    let report = build_report_with(&f, m, &compare, f.q() <= EXHAUSTIVE_INVARIANCE_MAX_Q)
        .map_err(|e| e.to_string())?;
    Ok(to_json(&generator_envelope(&report)))
}

pub fn group_json(p: u32, n: u32) -> Result<String, String> {
    Ok(to_json(&group_envelope(&field(p, n)?)))
}

pub fn fk_json(p: u32, n: u32, k: u32, method: &str) -> Result<String, String> {
    let f = field(p, n)?;
    let methods = match parse_method(method)? {
        Some(m) => vec![m],
        None => applicable_methods(&f, k as u64),
    };
    fk_envelope(&f, k as u64, &methods).map(|e| to_json(&e)).map_err(|e| e.to_string())
}

#[wasm_bindgen]
pub fn generator(p: u32, n: u32, method: &str) -> Result<String, JsValue> {
    generator_json(p, n, method).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn group(p: u32, n: u32) -> Result<String, JsValue> {
    group_json(p, n).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn fk(p: u32, n: u32, k: u32, method: &str) -> Result<String, JsValue> {
    fk_json(p, n, k, method).map_err(|e| JsValue::from_str(&e))
}
