//! Reports: a JSON document with sorted keys, and a text rendering derived
//! from it.

use flatbialg::verify::Verdict;
use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub verdict: Verdict,
    pub data: Value,
}

impl Report {
    pub fn new(command: &str, verdict: Verdict, data: Value) -> Report {
        Report {
            command: command.into(),
            verdict,
            data,
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self.verdict {
            Verdict::Pass => 0,
            Verdict::Fail | Verdict::Anomaly => 1,
        }
    }

    /// Pretty JSON. `serde_json` maps are ordered, so every object (including
    /// this struct, once turned into a value) comes out with sorted keys.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("reports are plain data");
        let mut out = serde_json::to_string_pretty(&value).expect("reports are plain data");
        out.push('\n');
        out
    }

    /// One `path  value` line per leaf of the JSON form, aligned, with the
    /// summary (if any) first.
    pub fn to_text(&self) -> String {
        let value = serde_json::to_value(self).expect("reports are plain data");
        let mut leaves = Vec::new();
        flatten("", &value, &mut leaves);
        let width = leaves.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
        let mut out = String::new();
        if let Some(Value::String(s)) = self.data.get("summary") {
            out.push_str(s);
            out.push('\n');
        }
        for (k, v) in leaves {
            let pad = width - k.chars().count();
            out.push_str(&format!("{k}{}  {v}\n", " ".repeat(pad)));
        }
        out
    }
}

fn flatten(prefix: &str, value: &Value, out: &mut Vec<(String, String)>) {
    match value {
        Value::Object(map) if !map.is_empty() => {
            for (k, v) in map {
                let key = if prefix.is_empty() {
                    k.clone()
                } else {
                    format!("{prefix}.{k}")
                };
                flatten(&key, v, out);
            }
        }
        Value::Array(items) if !items.is_empty() => {
            for (i, v) in items.iter().enumerate() {
                flatten(&format!("{prefix}[{i}]"), v, out);
            }
        }
        Value::String(s) => out.push((prefix.into(), s.clone())),
        other => out.push((prefix.into(), other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn json_keys_are_sorted_and_round_trip() {
        let r = Report::new("info", Verdict::Pass, json!({"zeta": 1, "alpha": {"b": 2, "a": [1, 2]}}));
        let text = r.to_json();
        let a = text.find("\"alpha\"").unwrap();
        assert!(a < text.find("\"zeta\"").unwrap());
        assert!(text.find("\"command\"").unwrap() < text.find("\"data\"").unwrap());
        let back: Report = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
        assert_eq!(back.to_json(), text);
    }

    #[test]
    fn text_is_flattened_json() {
        let r = Report::new(
            "info",
            Verdict::Fail,
            json!({"summary": "hello", "dims": [4, 2], "empty": []}),
        );
        let text = r.to_text();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "hello");
        assert!(lines.contains(&"data.dims[0]  4"), "{text}");
        assert!(lines.contains(&"data.empty    []"), "{text}");
        assert!(lines.contains(&"verdict       fail"), "{text}");
    }
}
