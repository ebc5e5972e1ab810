use serde_json::Value;

use crate::domain::Interpretation;
use crate::horn::Computation;

/// Sorted atom names.
pub fn interpretation_json(m: &Interpretation) -> Value {
    Value::from(m.names())
}

/// One array per interpretation, in canonical order.
pub fn interpretations_json<'a>(ms: impl IntoIterator<Item = &'a Interpretation>) -> Value {
    Value::Array(ms.into_iter().map(interpretation_json).collect())
}

pub fn computation_json(t: &Computation) -> Value {
    serde_json::json!({
        "steps": interpretations_json(t.steps()),
        "result": interpretation_json(t.result()),
    })
}

/// Compact single-line rendering.
pub fn emit_json(v: &Value) -> String {
    v.to_string()
}
