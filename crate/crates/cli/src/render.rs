//! JSON and text forms of engine results.

use kronecker::hunt::{Hit, HuntOutcome};
use kronecker::poly::Polynomial;
use kronecker::quasi::ShapeDecomposition;
use kronecker::stretch::HypothesisReport;
use kronecker::{Coeff, Index, KronTriple, QuasiPolynomial};
use serde_json::{json, Value};

/// Integers that fit in `u64` become JSON numbers; larger ones become strings.
pub fn count(g: Coeff) -> Value {
    u64::try_from(g).map_or_else(|_| Value::String(g.to_string()), Value::from)
}

pub fn index(i: Index) -> Value {
    match i {
        Index::Value(v) => json!(v),
        Index::ExceededCap(cap) => json!({ "exceeded_cap": cap }),
    }
}

pub fn polynomial(p: &Polynomial) -> Value {
    Value::Array(
        p.coeffs()
            .iter()
            .map(|c| Value::String(c.to_string()))
            .collect(),
    )
}

pub fn quasipolynomial(f: &QuasiPolynomial) -> Value {
    let branches: Vec<Value> = f
        .branches()
        .iter()
        .enumerate()
        .map(|(i, b)| json!({ "residue": i + 1, "coefficients": polynomial(b) }))
        .collect();
    json!({ "period": f.period(), "branches": branches, "text": f.to_string() })
}

pub fn shape(d: &ShapeDecomposition) -> Value {
    json!({
        "Q": d.q.to_string(),
        "L": d.l.to_string(),
        "delta_even": d.delta_even.to_string(),
        "delta_odd": d.delta_odd.to_string(),
    })
}

pub fn triple(t: &KronTriple) -> Value {
    json!({ "lambda": t.lambda.to_string(), "mu": t.mu.to_string(), "nu": t.nu.to_string() })
}

pub fn report(r: &HypothesisReport) -> Value {
    let samples: Vec<Value> = r
        .samples
        .values
        .iter()
        .map(|&(n, g)| json!([n, count(g)]))
        .collect();
    json!({
        "samples": samples,
        "method": r.samples.method.name(),
        "quasipolynomial": quasipolynomial(&r.quasipolynomial),
        "strong_sh": r.strong_sh_holds,
        "strong_ph2": r.strong_ph2_holds,
        "saturation_domain": r.saturation_domain,
        "saturation_index": index(r.saturation_index),
        "saturation_index_other_domain": r.saturation_index_other.map(index),
        "positivity_index": index(r.positivity_index),
        "shape": r.shape.as_ref().map(shape),
    })
}

pub fn report_text(r: &HypothesisReport) -> String {
    let mut out = String::new();
    let values: Vec<String> = r
        .samples
        .values
        .iter()
        .map(|(_, g)| g.to_string())
        .collect();
    out += &format!(
        "samples N=1..{}: {}\n",
        r.samples.n_max(),
        values.join(", ")
    );
    out += &format!("quasipolynomial: {}\n", r.quasipolynomial);
    if let Some(d) = &r.shape {
        out += &format!(
            "shape: Q = {}, L = {}, delta even = {}, delta odd = {}\n",
            d.q, d.l, d.delta_even, d.delta_odd
        );
    }
    out += &format!("strong SH: {}\n", holds(r.strong_sh_holds));
    out += &format!("strong PH2: {}\n", holds(r.strong_ph2_holds));
    out += &format!(
        "saturation index ({:?}): {}",
        r.saturation_domain, r.saturation_index
    )
    .to_lowercase();
    if let Some(other) = r.saturation_index_other {
        out += &format!(" (other domain: {other})");
    }
    out += &format!("\npositivity index: {}", r.positivity_index);
    out
}

fn holds(b: bool) -> &'static str {
    if b {
        "holds"
    } else {
        "fails"
    }
}

pub fn hit(h: &Hit) -> Value {
    let mut v = triple(&h.triple);
    v["report"] = report(&h.report);
    v
}

pub fn hunt(out: &HuntOutcome) -> Value {
    let list = |ts: &[KronTriple]| Value::Array(ts.iter().map(triple).collect());
    json!({
        "mode": out.mode,
        "examined": out.examined,
        "hits": out.hits.iter().map(hit).collect::<Vec<_>>(),
        "classification": {
            "holds": out.classification.holds(),
            "violations": list(&out.classification.violations),
            "missing": list(&out.classification.missing),
        },
    })
}
