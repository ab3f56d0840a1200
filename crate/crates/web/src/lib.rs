//! WebAssembly bindings for the browser demo.
//!
//! Every export takes plain strings and returns a JSON document; failures
//! come back as `{"error": "..."}` so the page only ever parses JSON.

use quasikit::classify::{classify, ClassifyOptions};
use quasikit::constructions::{ch_quasigroup, left_distributive_quasigroup, resolve_group, t_quasigroup, GroupSpec};
use quasikit::freewords::{canonical_form, words_equal, WordProblemMode};
use quasikit::tables::{parse_qg, write_qg, Permutation};
use quasikit::terms::parse_term;
use serde_json::{json, Value};
use wasm_bindgen::prelude::wasm_bindgen;

fn respond(result: Result<Value, String>) -> String {
    result.unwrap_or_else(|e| json!({ "error": e })).to_string()
}

fn permutation(text: &str, n: usize) -> Result<Permutation, String> {
    if text.trim().is_empty() {
        return Ok(Permutation::identity(n));
    }
    let images = text
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| format!("`{}` is not an element", p.trim()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Permutation::new(images).ok_or_else(|| format!("`{text}` is not a permutation"))
}

/// Builds a T-, CH- or left-distributive quasigroup over a named group.
///
/// `kind` is `t`, `ch` or `leftdist`; empty automorphisms mean the identity.
#[wasm_bindgen]
pub fn construct(kind: &str, group: &str, phi: &str, psi: &str, c: usize) -> String {
    respond((|| {
        let spec: GroupSpec = group.parse().map_err(|e| format!("{e}"))?;
        let g = resolve_group(&spec);
        let n = g.order();
        let (phi, psi) = (permutation(phi, n)?, permutation(psi, n)?);
        let q = match kind {
            "t" => t_quasigroup(&g, &phi, &psi, c),
            "ch" => ch_quasigroup(&g, c),
            "leftdist" => left_distributive_quasigroup(&g, &phi),
            other => return Err(format!("unknown construction `{other}`")),
        }
        .map_err(|e| e.to_string())?;
        Ok(json!({
            "group": spec.to_string(),
            "order": n,
            "table": q.rows().collect::<Vec<_>>(),
            "qg": write_qg(&q),
        }))
    })())
}

/// Runs the full classification on a table in `.qg` text form.
#[wasm_bindgen]
pub fn classify_table(qg: &str, max_class: usize) -> String {
    respond((|| {
        let q = parse_qg(qg).map_err(|e| e.to_string())?;
        let options = ClassifyOptions {
            max_class,
            decompose_t: true,
            ..ClassifyOptions::default()
        };
        let report = classify(&q, &options).map_err(|e| e.to_string())?;
        serde_json::to_value(&report).map_err(|e| e.to_string())
    })())
}

/// Decides whether two terms are equal in the free T-quasigroup, or in the
/// free medial quasigroup when `medial` is set.
#[wasm_bindgen]
pub fn word_eq(t1: &str, t2: &str, medial: bool) -> String {
    respond((|| {
        let a = parse_term(t1).map_err(|e| format!("left term: {e}"))?;
        let b = parse_term(t2).map_err(|e| format!("right term: {e}"))?;
        let mode = if medial {
            WordProblemMode::Medial
        } else {
            WordProblemMode::FreeT
        };
        let mut out = serde_json::to_value(words_equal(&a, &b, mode)).map_err(|e| e.to_string())?;
        out["lhs"] = json!(canonical_form(&a, mode).to_string());
        out["rhs"] = json!(canonical_form(&b, mode).to_string());
        Ok(out)
    })())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: String) -> Value {
        serde_json::from_str(&s).unwrap()
    }

    #[test]
    fn construct_and_classify() {
        let built = parse(construct("t", "Z3", "", "0,2,1", 0));
        assert_eq!(built["table"], json!([[0, 2, 1], [1, 0, 2], [2, 1, 0]]));
        let report = parse(classify_table(built["qg"].as_str().unwrap(), 2));
        assert_eq!(report["entries"]["MEDIAL"]["verdict"], "holds");
        assert_eq!(report["consistency"], true);
        assert!(report["t_decomposition"].is_object());
    }

    #[test]
    fn errors_are_json() {
        assert!(parse(construct("t", "Z3", "1,0,2", "", 0))["error"].is_string());
        assert!(parse(construct("x", "Z3", "", "", 0))["error"].is_string());
        assert!(parse(construct("ch", "M7", "", "", 0))["error"].is_string());
        assert!(parse(classify_table("2\n0 1\n0 1\n", 2))["error"].is_string());
        assert!(parse(word_eq("x*", "y", false))["error"].is_string());
    }

    #[test]
    fn word_equality() {
        assert_eq!(parse(word_eq("x*(x\\y)", "y", false))["result"], "equal");
        let v = parse(word_eq("(x*y)*(z*w)", "(x*z)*(y*w)", false));
        assert_eq!(v["result"], "unequal");
        assert!(v["certificate"]["table"].is_array());
        assert_eq!(parse(word_eq("(x*y)*(z*w)", "(x*z)*(y*w)", true))["result"], "equal");
    }
}
