//! Command reports: the echoed command, a JSON result, discrepancy notes and
//! an exit status.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    #[default]
    Text,
}

impl std::str::FromStr for Format {
    type Err = crate::Error;
    fn from_str(s: &str) -> crate::Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "text" => Ok(Format::Text),
            _ => Err(crate::Error::UnknownKind(format!("format `{s}`"))),
        }
    }
}

/// Exit statuses.
pub const EXIT_OK: i32 = 0;
pub const EXIT_NOT_FOUND: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Annotation {
    pub id: String,
    pub message: String,
}

impl Annotation {
    pub fn new(id: &str, message: impl Into<String>) -> Self {
        Self { id: id.into(), message: message.into() }
    }
}

pub mod notes {
    use super::Annotation;
    use crate::constructors::{format_poly, Irreducibility, PolyModRing};
    use crate::{LatticeSet, Rat};

    /// Set when the quotient is Z_3[x]/(x^4 + 1).
    pub fn for_quotient(q: &PolyModRing, irr: &Irreducibility) -> Option<Annotation> {
        if q.p != 3 || q.modulus != [1, 0, 0, 0, 1] {
            return None;
        }
        let (g, h) = irr.factors.as_ref()?;
        Some(reducible_modulus(&format!("({})({})", format_poly(g), format_poly(h))))
    }

    /// Set for 2Z+ · 5 · 3Z+.
    pub fn for_double_coset(h: &LatticeSet, x: &Rat, k: &LatticeSet) -> Option<Annotation> {
        let two = LatticeSet::pos(Rat::from_integer(2));
        let three = LatticeSet::pos(Rat::from_integer(3));
        (h == &two && k == &three && *x == Rat::from_integer(5)).then(double_coset_listing)
    }

    pub fn reducible_modulus(factors: &str) -> Annotation {
        Annotation::new(
            "reducible-modulus",
            format!(
                "x^4 + 1 is listed as irreducible over Z_3, but it factors as {factors}; the quotient has zero divisors \
                 and is not a field, though (2x^2)(x^2) = 1 still holds"
            ),
        )
    }

    pub fn double_coset_listing() -> Annotation {
        Annotation::new(
            "double-coset-listing",
            "H·5·K with H = 2Z+, K = 3Z+ is {2a·5·3b} = 30Z+, which contains 90; the listing {30, 60, 120, 240, 360, ...} \
             omits it",
        )
    }

    pub fn orthogonality() -> Annotation {
        Annotation::new(
            "orthogonality",
            "zero is the only self-orthogonal vector and the only vector orthogonal to every vector, but nonzero vectors \
             with disjoint support are orthogonal to each other, so 'zero is the only orthogonal vector' holds only in \
             those two readings",
        )
    }

    pub fn transition_signature() -> Annotation {
        Annotation::new(
            "transition-signature",
            "the automaton definitions disagree on the codomain of μ (states vs inputs); transitions here are \
             μ: states × P → states and outputs λ: states × P → S",
        )
    }

    pub fn bounded_freeness(bound: usize) -> Annotation {
        Annotation::new(
            "bounded-freeness",
            format!("freeness of the input alphabet is checked over multisets of size at most {bound}"),
        )
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: Vec<String>,
    pub result: serde_json::Value,
    pub annotations: Vec<Annotation>,
    pub exit_status: i32,
    /// Human-readable rendering of `result`.
    #[serde(skip)]
    pub summary: String,
}

impl Report {
    pub fn new(command: Vec<String>, result: serde_json::Value, summary: String, exit_status: i32) -> Self {
        Self { command, result, annotations: Vec::new(), exit_status, summary }
    }

    pub fn error(command: Vec<String>, message: &str) -> Self {
        Self::new(command, serde_json::json!({ "error": message }), format!("error: {message}"), EXIT_ERROR)
    }

    pub fn annotate(mut self, a: Annotation) -> Self {
        if !self.annotations.contains(&a) {
            self.annotations.push(a);
        }
        self
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
                s.push('\n');
                s
            }
            Format::Text => {
                let mut s = self.summary.clone();
                if !s.is_empty() && !s.ends_with('\n') {
                    s.push('\n');
                }
                for a in &self.annotations {
                    s.push_str(&format!("note [{}]: {}\n", a.id, a.message));
                }
                s
            }
        }
    }
}
