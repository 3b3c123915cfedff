//! Command reports in human and JSON form.
//!
//! The same structure backs both renderings. Numbers inside `results` are
//! strings: exact values as `p/q`, floats with 17 significant digits. The
//! wall-clock time lives in its own field so that everything else is
//! deterministic.

use serde::Serialize;
use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Pass => 0,
            Verdict::Fail => 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub command: Vec<String>,
    pub results: Value,
    pub verdict: Verdict,
    /// Milliseconds; excluded from comparisons of report contents.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_clock_ms: Option<f64>,
}

impl Report {
    pub fn new(command: Vec<String>, results: Value, verdict: Verdict) -> Self {
        Report { command, results, verdict, wall_clock_ms: None }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    /// The report without its timing field.
    pub fn without_timing(&self) -> Report {
        Report { wall_clock_ms: None, ..self.clone() }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("command: {}\n", self.command.join(" "));
        render(&self.results, 0, &mut out);
        out.push_str(match self.verdict {
            Verdict::Pass => "verdict: PASS\n",
            Verdict::Fail => "verdict: FAIL\n",
        });
        if let Some(ms) = self.wall_clock_ms {
            out.push_str(&format!("wall_clock_ms: {ms:.3}\n"));
        }
        out
    }
}

fn inline(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) => {
            let parts: Option<Vec<String>> = items
                .iter()
                .map(|i| match i {
                    Value::Array(_) | Value::Object(_) => None,
                    other => inline(other),
                })
                .collect();
            parts.map(|p| format!("[{}]", p.join(", ")))
        }
        Value::Object(_) => None,
    }
}

fn render_object(map: &Map<String, Value>, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    for (key, value) in map {
        if let Value::String(s) = value {
            if s.contains('\n') {
                out.push_str(&format!("{pad}{key}: |\n"));
                for line in s.lines() {
                    out.push_str(&format!("{pad}    {line}\n"));
                }
                continue;
            }
        }
        match inline(value) {
            Some(s) => out.push_str(&format!("{pad}{key}: {s}\n")),
            None => {
                out.push_str(&format!("{pad}{key}:\n"));
                render(value, indent + 1, out);
            }
        }
    }
}

fn render(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => render_object(map, indent, out),
        Value::Array(items) => {
            for item in items {
                match (inline(item), item) {
                    (Some(s), _) => out.push_str(&format!("{pad}- {s}\n")),
                    (None, Value::Object(map)) => {
                        let mut inner = String::new();
                        render_object(map, indent + 1, &mut inner);
                        let trimmed = inner.trim_start();
                        out.push_str(&format!("{pad}- {trimmed}"));
                    }
                    (None, other) => {
                        out.push_str(&format!("{pad}-\n"));
                        render(other, indent + 1, out);
                    }
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", inline(other).unwrap_or_default())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn text_rendering() {
        let mut r = Report::new(
            vec!["hyplab".into(), "haar".into(), "z2.hyp".into()],
            json!({"haar": {"e": "1/2", "a": "1/2"}, "labels": ["e", "a"]}),
            Verdict::Pass,
        );
        r.wall_clock_ms = Some(1.5);
        let text = r.to_text();
        assert!(text.starts_with("command: hyplab haar z2.hyp\n"));
        assert!(text.contains("haar:\n  e: 1/2\n  a: 1/2\n"));
        assert!(text.contains("labels: [e, a]\n"));
        assert!(text.contains("verdict: PASS\nwall_clock_ms: 1.500\n"));
        assert!(!r.without_timing().to_json().contains("wall_clock"));
    }

    #[test]
    fn lists_of_objects() {
        let r = Report::new(vec![], json!({"checks": [{"axiom": "identity", "passed": true}]}), Verdict::Fail);
        assert!(r.to_text().contains("checks:\n  - axiom: identity\n    passed: true\n"));
        assert_eq!(Verdict::Fail.exit_code(), 1);
    }
}
