//! Canonical JSON rendering.
//!
//! Output must be byte-stable under parse -> re-serialize, so nothing
//! is left to the default serializer: keys keep insertion order
//! (`serde_json` with `preserve_order`), integers print bare, and every
//! float prints with 17 significant digits in scientific notation --
//! enough to pin down an f64 exactly, so the re-serialized bytes match.

use serde_json::Value;
use std::fmt::Write;

/// Render a JSON value in canonical form (single line, no spaces).
pub fn to_canonical_string(value: &Value) -> String {
    let mut out = String::new();
    write_value(&mut out, value);
    out
}

fn write_value(out: &mut String, value: &Value) {
    match value {
        Value::Null => out.push_str("null"),
        Value::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
        Value::Number(n) => {
            if let Some(u) = n.as_u64() {
                write!(out, "{u}").unwrap();
            } else if let Some(i) = n.as_i64() {
                write!(out, "{i}").unwrap();
            } else {
                // 16 digits after the point = 17 significant digits.
                write!(out, "{:.16e}", n.as_f64().unwrap()).unwrap();
            }
        }
        Value::String(s) => {
            out.push_str(&serde_json::to_string(s).expect("string serialization"))
        }
        Value::Array(items) => {
            out.push('[');
            for (i, item) in items.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                write_value(out, item);
            }
            out.push(']');
        }
        Value::Object(map) => {
            out.push('{');
            for (i, (key, item)) in map.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                out.push_str(&serde_json::to_string(key).expect("key serialization"));
                out.push(':');
                write_value(out, item);
            }
            out.push('}');
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn round_trip(v: &Value) -> String {
        let first = to_canonical_string(v);
        let reparsed: Value = serde_json::from_str(&first).unwrap();
        let second = to_canonical_string(&reparsed);
        assert_eq!(first, second, "round trip changed bytes");
        first
    }

    #[test]
    fn scalars() {
        assert_eq!(round_trip(&json!(null)), "null");
        assert_eq!(round_trip(&json!(true)), "true");
        assert_eq!(round_trip(&json!(1000)), "1000");
        assert_eq!(round_trip(&json!(-7)), "-7");
        assert_eq!(round_trip(&json!("a \"b\" c")), "\"a \\\"b\\\" c\"");
    }

    #[test]
    fn floats_print_17_significant_digits() {
        assert_eq!(round_trip(&json!(0.5)), "5.0000000000000000e-1");
        assert_eq!(round_trip(&json!(2.0)), "2.0000000000000000e0");
        round_trip(&json!(0.1 + 0.2));
        round_trip(&json!(1.0 / 3.0));
        round_trip(&json!(f64::MIN_POSITIVE));
        round_trip(&json!(-1.2345678901234567e-300));
    }

    #[test]
    fn preserves_key_order() {
        let v = json!({"z": 1, "a": 2, "m": {"k2": [1, 2.5], "k1": null}});
        assert_eq!(
            round_trip(&v),
            "{\"z\":1,\"a\":2,\"m\":{\"k2\":[1,2.5000000000000000e0],\"k1\":null}}"
        );
    }
}
