//! Browser bindings for the demo page: a coset explorer, a Cayley-table
//! explorer with substructure detection, and a polynomial quotient explorer.
//! Every entry point takes strings and returns a JSON string; failures come
//! back as `{"error": "..."}`.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use sdalg::constructors::{build_poly_quotient, format_poly, is_irreducible};
use sdalg::descriptor::parse_descriptor;
use sdalg::detect::{detect, Detection, Mode, Property, Structure};
use sdalg::rational::{format_rat, parse_rat};
use sdalg::symbolic::SymbolicAmbient;
use sdalg::{LatticeSet, Result};

fn respond(r: Result<Value>) -> String {
    match r {
        Ok(v) => v.to_string(),
        Err(e) => json!({ "error": e.to_string() }).to_string(),
    }
}

/// `aH`, and `HaK` when `k` is nonempty.
pub fn cosets(h: &str, a: &str, k: &str, ambient: &str) -> Result<Value> {
    let h: LatticeSet = h.parse()?;
    let a = parse_rat(a)?;
    let amb = match ambient {
        "add" => SymbolicAmbient::QAdd,
        _ => SymbolicAmbient::QNonZeroMul,
    };
    let left = h.left_coset(&a, amb)?;
    let mut out = json!({
        "H": h.to_string(),
        "a": format_rat(&a),
        "left": left.to_string(),
        "left_contains_H": h.subset_of(&left),
        "left_inside_H": left.subset_of(&h),
        "left_closed": left.is_closed_mul(),
    });
    if !k.trim().is_empty() {
        let k: LatticeSet = k.parse()?;
        let d = LatticeSet::double_coset(&h, &a, &k)?;
        out["double"] = json!(d.to_string());
        out["double_meets_H"] = json!(!d.intersect(&h).is_empty());
        out["double_closed"] = json!(d.is_closed_mul());
        out["sample"] = json!(d.truncate(60).map(|v| v.iter().map(format_rat).collect::<Vec<_>>()));
    }
    Ok(out)
}

/// Table and detection result for a descriptor.
pub fn cayley(descriptor: &str, property: &str) -> Result<Value> {
    let s = parse_descriptor(descriptor)?.build()?;
    let p: Property = property.parse()?;
    let (labels, tables) = match &s {
        Structure::Magma { table, .. } => (table.labels().to_vec(), json!({ "op": table.rows() })),
        Structure::Ring { table, .. } => (
            table.labels().to_vec(),
            json!({ "add": table.additive().rows(), "mul": table.multiplicative().rows() }),
        ),
        Structure::Symbolic { .. } => (Vec::new(), json!({})),
    };
    let mode = if s.is_finite() { Mode::Exhaustive } else { Mode::Catalog };
    let det = detect(&s, p, mode)?;
    let (found, witness) = match &det {
        Detection::Found { certificate } => (true, json!(certificate.witness_text())),
        Detection::NotFound { .. } => (false, Value::Null),
    };
    let highlight = det.certificate().and_then(|c| c.finite_witness()).map(<[usize]>::to_vec);
    Ok(json!({
        "name": s.name(),
        "labels": labels,
        "tables": tables,
        "property": p.to_string(),
        "found": found,
        "witness": witness,
        "highlight": highlight,
        "detection": det,
    }))
}

/// `Z_p[x]/(f)`; `element` is optional, constant term first.
pub fn quotient(p: u32, modulus: &str, element: &str) -> Result<Value> {
    let ints = |t: &str| -> Result<Vec<i64>> {
        t.split(',')
            .map(str::trim)
            .filter(|x| !x.is_empty())
            .map(|x| x.parse().map_err(|_| sdalg::Error::Malformed(format!("`{x}` is not an integer"))))
            .collect()
    };
    let f = ints(modulus)?;
    let q = build_poly_quotient(p as u64, &f)?;
    let irr = is_irreducible(p as u64, &f)?;
    let field = q.quotient_is_field();
    let mut out = json!({
        "ring": format!("Z_{p}[x]/({})", format_poly(&q.modulus)),
        "order": q.order(),
        "irreducible": irr.irreducible,
        "factors": irr.factors.as_ref().map(|(a, b)| [format_poly(a), format_poly(b)]),
        "field": field.field,
        "zero_divisor": field.zero_divisor.as_ref().map(|(a, b)| [q.label(a), q.label(b)]),
    });
    if !element.trim().is_empty() {
        let e = q.element(&ints(element)?);
        out["element"] = json!(q.label(&e));
        out["inverse"] = json!(q.inverse(&e).map(|i| q.label(&i)));
    }
    Ok(out)
}

#[wasm_bindgen]
pub fn coset_explorer(h: &str, a: &str, k: &str, ambient: &str) -> String {
    respond(cosets(h, a, k, ambient))
}

#[wasm_bindgen]
pub fn cayley_explorer(descriptor: &str, property: &str) -> String {
    respond(cayley(descriptor, property))
}

#[wasm_bindgen]
pub fn quotient_explorer(p: u32, modulus: &str, element: &str) -> String {
    respond(quotient(p, modulus, element))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parsed(s: String) -> Value {
        serde_json::from_str(&s).unwrap()
    }

    #[test]
    fn coset_page() {
        let v = parsed(coset_explorer("2Z+", "-1", "3Z+", "mul"));
        assert_eq!(v["double"], "6*Z-");
        assert_eq!(v["double_meets_H"], false);
        let v = parsed(coset_explorer("Z+", "1/2", "", "mul"));
        assert_eq!(v["left_contains_H"], true);
        assert!(v.get("double").is_none());
        assert!(parsed(coset_explorer("zz", "1", "", "mul"))["error"].is_string());
    }

    #[test]
    fn cayley_page() {
        let v = parsed(cayley_explorer(r#"{"kind":"zn","n":10,"op":"mul"}"#, "s-semigroup"));
        assert_eq!(v["highlight"], json!([1, 3, 7, 9]));
        assert_eq!(v["tables"]["op"][3][7], 1);
        let v = parsed(cayley_explorer(r#"{"kind":"symbolic","name":"Q_field"}"#, "s-definite-special-field"));
        assert_eq!(v["found"], true);
        assert!(parsed(cayley_explorer("{}", "s-ring"))["error"].is_string());
    }

    #[test]
    fn quotient_page() {
        let v = parsed(quotient_explorer(3, "1,0,0,0,1", "0,0,2"));
        assert_eq!((v["order"].as_u64(), v["inverse"].as_str()), (Some(81), Some("x^2")));
        assert_eq!(v["irreducible"], false);
        let v = parsed(quotient_explorer(2, "1,0,1", ""));
        assert_eq!(v["zero_divisor"], json!(["x + 1", "x + 1"]));
        assert!(parsed(quotient_explorer(4, "1,1", ""))["error"].is_string());
    }
}
