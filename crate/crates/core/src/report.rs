//! Ordered key/value reports rendered as indented text or JSON.

use serde_json::{Map, Value};

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Report {
    entries: Map<String, Value>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn set(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.entries.insert(key.to_string(), value.into());
        self
    }

    pub fn set_list<T: Into<Value>>(&mut self, key: &str, items: impl IntoIterator<Item = T>) -> &mut Self {
        let list: Vec<Value> = items.into_iter().map(Into::into).collect();
        self.entries.insert(key.to_string(), Value::Array(list));
        self
    }

    pub fn section(&mut self, key: &str, report: Report) -> &mut Self {
        self.entries.insert(key.to_string(), Value::Object(report.entries));
        self
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.entries.get(key)
    }

    /// Looks up a dotted path such as `lemma.holds`.
    pub fn lookup(&self, path: &str) -> Option<&Value> {
        let mut parts = path.split('.');
        let mut cur = self.entries.get(parts.next()?)?;
        for p in parts {
            cur = cur.get(p)?;
        }
        Some(cur)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&Value::Object(self.entries.clone())).expect("serializable")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        write_map(&mut out, &self.entries, 0);
        out
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.to_text(),
            Format::Json => self.to_json() + "\n",
        }
    }
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "null".into(),
        other => other.to_string(),
    }
}

fn write_map(out: &mut String, map: &Map<String, Value>, depth: usize) {
    let pad = "  ".repeat(depth);
    for (k, v) in map {
        match v {
            Value::Object(inner) => {
                out.push_str(&format!("{pad}{k}:\n"));
                write_map(out, inner, depth + 1);
            }
            Value::Array(items) if items.is_empty() => out.push_str(&format!("{pad}{k}: []\n")),
            Value::Array(items) => {
                out.push_str(&format!("{pad}{k}:\n"));
                for item in items {
                    match item {
                        Value::Object(inner) => {
                            out.push_str(&format!("{pad}  -\n"));
                            write_map(out, inner, depth + 2);
                        }
                        other => out.push_str(&format!("{pad}  - {}\n", scalar_text(other))),
                    }
                }
            }
            other => out.push_str(&format!("{pad}{k}: {}\n", scalar_text(other))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_and_json_keep_order() {
        let mut inner = Report::new();
        inner.set("holds", true);
        let mut r = Report::new();
        r.set("command", "validate").set("dim", 3).set_list("basis", ["h", "e"]).section("check", inner);
        assert_eq!(r.to_text(), "command: validate\ndim: 3\nbasis:\n  - h\n  - e\ncheck:\n  holds: true\n");
        let json = r.to_json();
        assert!(json.find("command").unwrap() < json.find("check").unwrap());
        assert_eq!(r.lookup("check.holds"), Some(&Value::Bool(true)));
    }
}
