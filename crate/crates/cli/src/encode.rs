//! JSON encodings of core values.

use liftlog_core::derivation::{DerivationModule, GradedDerivation};
use liftlog_core::linalg::format_q;
use liftlog_core::semigroup::{OrderSet, SemigroupIdeal};
use liftlog_core::valuation::WeightValuation;
use liftlog_core::{MonomialIdeal, RingContext};
use serde_json::{json, Value};

pub fn ideal(i: &MonomialIdeal) -> Value {
    Value::String(i.to_string())
}

pub fn derivation(ctx: &RingContext, d: &GradedDerivation) -> Value {
    json!({
        "degree": d.degree(),
        "coeffs": d.coeffs().iter().map(format_q).collect::<Vec<_>>(),
        "text": d.to_text(ctx),
    })
}

pub fn module(m: &DerivationModule) -> Value {
    json!({
        "pretty": m.to_string(),
        "generators": m.generators().iter().map(|g| derivation(m.ctx(), g)).collect::<Vec<_>>(),
    })
}

pub fn weight(v: &WeightValuation) -> Value {
    json!(v.weights())
}

pub fn sgr_ideal(e: &SemigroupIdeal) -> Value {
    json!({
        "pretty": e.to_string(),
        "generators": e.generators(),
        "threshold": e.threshold(),
        "exceptions": e.exceptions(),
    })
}

pub fn order_set(k: &OrderSet) -> Value {
    json!({
        "pretty": k.to_string(),
        "generators": k.generators(),
        "threshold": k.threshold(),
        "exceptions": k.exceptions(),
        "min_order": k.min_order(),
    })
}

/// `[4, 9]` as `(4,9)`.
pub fn tuple(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}
