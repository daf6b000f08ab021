use bellrec::arith::RingElem;
use serde::Serialize;
use serde_json::{Map, Value};

/// An exact value as printed: a decimal integer or `p/q` string, or the
/// coefficient list (lowest degree first) of a polynomial.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Rendered {
    Scalar(String),
    Poly(Vec<String>),
}

impl Rendered {
    pub fn plain(&self) -> String {
        match self {
            Rendered::Scalar(s) => s.clone(),
            Rendered::Poly(cs) => format!("[{}]", cs.join(",")),
        }
    }
}

impl From<&RingElem> for Rendered {
    fn from(e: &RingElem) -> Self {
        match e {
            RingElem::Poly(p) => Rendered::Poly(p.coeffs().iter().map(ToString::to_string).collect()),
            other => Rendered::Scalar(other.to_string()),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct OutputRecord {
    pub command: String,
    pub params: Map<String, Value>,
    pub values: Vec<Rendered>,
    pub methods: Vec<String>,
    pub verdict: Option<String>,
}

impl OutputRecord {
    pub fn new(command: &str) -> Self {
        OutputRecord {
            command: command.to_owned(),
            params: Map::new(),
            values: Vec::new(),
            methods: Vec::new(),
            verdict: None,
        }
    }

    pub fn param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.params.insert(key.to_owned(), value.into());
        self
    }

    pub fn list_param(self, key: &str, items: &[RingElem]) -> Self {
        let list: Vec<Value> = items.iter().map(|e| Value::String(e.to_string())).collect();
        self.param(key, list)
    }

    /// One value per line, then `verdict: ...` when a verdict is present.
    pub fn to_plain(&self) -> String {
        let mut out = String::new();
        for v in &self.values {
            out.push_str(&v.plain());
            out.push('\n');
        }
        if let Some(verdict) = &self.verdict {
            out.push_str("verdict: ");
            out.push_str(verdict);
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("record serializes");
        s.push('\n');
        s
    }
}
