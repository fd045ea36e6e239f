//! Browser demo bindings: string-in/JSON-out wrappers over the core crate.
//!
//! Three operations are exposed to the page: `decompose` (pick a domain, a
//! fraction and a method, get a verified certificate), `analyze`
//! (membership, valuation where defined, and the Bonaccian split of a
//! fraction), and `classify_domain` (the Egyptian/DVR verdict). Every
//! function returns a JSON string — either the result object or
//! `{"error": {...}}` — so the page never deals with exceptions.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use recip_core::decompose::{
    decomposition_to_json, euclid_decompose, greedy_decompose_z, integer_expand, verify,
};
use recip_core::instances::AnyDomain;
use recip_core::recip::{
    bonaccian_split, classification_to_json, classify, is_in_r, membership_to_json, valuation,
    valuation_to_json,
};
use recip_core::with_domain;
use recip_core::{Branch, EuclideanDomain, Fraction};

fn render(result: Result<Value, recip_core::Error>) -> String {
    let v = match result {
        Ok(v) => v,
        Err(e) => json!({ "error": { "message": e.to_string() } }),
    };
    serde_json::to_string(&v).expect("serializable")
}

fn decompose_impl(domain: &str, value: &str, method: &str) -> Result<Value, recip_core::Error> {
    let any = AnyDomain::from_selector(domain)?;
    match method {
        "euclid" => with_domain!(&any, |dom| {
            let alpha = Fraction::parse(dom, value)?;
            let dec = euclid_decompose(dom, &alpha)?;
            Ok(json!({
                "certificate": decomposition_to_json(dom, &dec),
                "pretty": pretty_sum(dom, &dec.denominators, &alpha),
            }))
        }),
        "greedy" | "integer" => {
            let AnyDomain::Z(z) = &any else {
                return Err(recip_core::Error::GreedyRange);
            };
            let alpha = Fraction::parse(z, value)?;
            let dec = if method == "greedy" {
                greedy_decompose_z(&alpha)?
            } else {
                integer_expand(&alpha)?
            };
            Ok(json!({
                "certificate": decomposition_to_json(z, &dec),
                "pretty": pretty_sum(z, &dec.denominators, &alpha),
            }))
        }
        _ => Err(recip_core::Error::GreedyRange),
    }
}

fn pretty_sum<D: EuclideanDomain>(
    dom: &D,
    denoms: &[D::Elem],
    target: &Fraction<D::Elem>,
) -> String {
    if denoms.is_empty() {
        return format!("{} = 0 (empty sum)", target.format(dom));
    }
    let terms: Vec<String> = denoms
        .iter()
        .map(|d| {
            let s = dom.elem_to_string(d);
            if s[1..].contains(['+', '-']) {
                format!("1/({s})")
            } else {
                format!("1/{s}")
            }
        })
        .collect();
    format!("{} = {}", target.format(dom), terms.join(" + "))
}

fn analyze_impl(domain: &str, value: &str) -> Result<Value, recip_core::Error> {
    let any = AnyDomain::from_selector(domain)?;
    with_domain!(&any, |dom| {
        let alpha = Fraction::parse(dom, value)?;
        let membership = is_in_r(dom, &alpha);
        let val = match dom.known_branch() {
            Branch::Dvr if !alpha.is_zero(dom) => Some(valuation_to_json(&valuation(dom, &alpha)?)),
            _ => None,
        };
        let split = if alpha.is_zero(dom) {
            None
        } else {
            let s = bonaccian_split(dom, &alpha)?;
            debug_assert!(verify(dom, &s.certificate).valid);
            Some(json!({
                "side": s.side.as_str(),
                "certificate": decomposition_to_json(dom, &s.certificate),
                "pretty": pretty_sum(dom, &s.certificate.denominators, &s.certificate.target),
            }))
        };
        Ok(json!({
            "fraction": alpha.format(dom),
            "membership": membership_to_json(dom, &membership),
            "valuation": val,
            "split": split,
        }))
    })
}

fn classify_impl(domain: &str) -> Result<Value, recip_core::Error> {
    let any = AnyDomain::from_selector(domain)?;
    with_domain!(&any, |dom| {
        let c = classify(dom);
        let mut v = classification_to_json(dom, &c);
        if let Some(obj) = v.as_object_mut() {
            obj.insert(
                "uniformizer".to_string(),
                match &c.uniformizer_den {
                    Some(y) => Value::String(format!("1/{}", dom.elem_to_string(y))),
                    None => Value::Null,
                },
            );
            obj.insert(
                "residue_units".to_string(),
                c.residue_units
                    .clone()
                    .map(Value::String)
                    .unwrap_or(Value::Null),
            );
        }
        Ok(v)
    })
}

/// Decompose `value` over `domain` with `method` (euclid | greedy | integer).
#[wasm_bindgen]
pub fn decompose(domain: &str, value: &str, method: &str) -> String {
    render(decompose_impl(domain, value, method))
}

/// Membership in R(D), valuation (DVR branch) and the Bonaccian split.
#[wasm_bindgen]
pub fn analyze(domain: &str, value: &str) -> String {
    render(analyze_impl(domain, value))
}

/// The Egyptian/DVR dichotomy verdict for a domain selector.
#[wasm_bindgen]
pub fn classify_domain(domain: &str) -> String {
    render(classify_impl(domain))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decompose_returns_certificate_json() {
        let out = decompose("z", "4/5", "greedy");
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["certificate"]["denominators"], json!(["2", "4", "20"]));
        assert_eq!(v["pretty"], "4/5 = 1/2 + 1/4 + 1/20");
    }

    #[test]
    fn analyze_polynomial_fraction() {
        let out = analyze("qx", "(x^2+1)/x");
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["membership"]["member"], false);
        assert_eq!(v["valuation"]["value"], -1);
        assert_eq!(v["split"]["side"], "alpha_inverse");
    }

    #[test]
    fn classify_reports_uniformizer() {
        let out = classify_domain("fp:5");
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["branch"], "dvr");
        assert_eq!(v["uniformizer"], "1/x");

        let out = classify_domain("zi");
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["branch"], "egyptian");
    }

    #[test]
    fn errors_become_json() {
        let out = decompose("nope", "1/2", "euclid");
        let v: Value = serde_json::from_str(&out).unwrap();
        assert!(v["error"]["message"].as_str().unwrap().contains("selector"));
    }
}
