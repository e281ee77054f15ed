//! Presentation files:
//!
//! ```json
//! {"field": "Q",
//!  "generators": [{"name": "g", "kind": "grouplike"},
//!                 {"name": "y", "kind": "skewprimitive", "pair": "g"}],
//!  "rules": [{"lhs": "g*y", "rhs": "2*y*g"}, {"lhs": "g^-1*y", "rhs": "1/2*y*g^-1"}]}
//! ```
//!
//! `field` is `"Q"` or `{"quad": d}`. Generators may carry an integer
//! `weight` (default 1); an optional top-level `order` lists every symbol
//! (`"g"`, `"g^-1"`) from smallest to largest.

use serde::{Deserialize, Serialize};

use super::parse::{parse_free, parse_word};
use crate::error::{Error, Result};
use crate::freealg::{Algebra, Alphabet, Generator, RewriteRule};
use crate::hopfstruct::{hopf_axiom_report, GenKind, HopfPresentation};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FieldSpec {
    Named(String),
    Quad { quad: i64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum KindSpec {
    Grouplike,
    Skewprimitive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorSpec {
    pub name: String,
    pub kind: KindSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pair: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weight: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RuleSpec {
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationFile {
    pub field: FieldSpec,
    pub generators: Vec<GeneratorSpec>,
    pub rules: Vec<RuleSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<Vec<String>>,
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidPresentation(msg.into())
}

impl PresentationFile {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| invalid(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    /// Builds the presentation without the axiom check.
    pub fn construct(&self, name: &str) -> Result<HopfPresentation> {
        let field = match &self.field {
            FieldSpec::Named(s) if s == "Q" => None,
            FieldSpec::Named(s) => return Err(invalid(format!("unknown field '{s}'"))),
            FieldSpec::Quad { quad } => Some(*quad),
        };
        let gens: Vec<Generator> = self
            .generators
            .iter()
            .map(|g| {
                let base = match g.kind {
                    KindSpec::Grouplike => Generator::invertible(&g.name),
                    KindSpec::Skewprimitive => Generator::plain(&g.name),
                };
                base.with_weight(g.weight.unwrap_or(1))
            })
            .collect();
        let alpha = match &self.order {
            None => Alphabet::new(gens)?,
            Some(order) => {
                let lookup = |s: &str| -> Result<(usize, bool)> {
                    let (name, inverse) = match s.strip_suffix("^-1") {
                        Some(n) => (n, true),
                        None => (s, false),
                    };
                    let i = gens
                        .iter()
                        .position(|g| g.name == name)
                        .ok_or_else(|| Error::UnknownGenerator(name.to_string()))?;
                    Ok((i, inverse))
                };
                let order = order
                    .iter()
                    .map(|s| lookup(s.trim()))
                    .collect::<Result<Vec<_>>>()?;
                Alphabet::with_precedence(gens, &order)?
            }
        };
        let mut kinds = Vec::new();
        for g in &self.generators {
            kinds.push(match (&g.kind, &g.pair) {
                (KindSpec::Grouplike, None) => GenKind::GroupLike,
                (KindSpec::Grouplike, Some(_)) => {
                    return Err(invalid(format!(
                        "group-like generator '{}' has a pair",
                        g.name
                    )))
                }
                (KindSpec::Skewprimitive, Some(p)) => GenKind::SkewPrimitive {
                    pair: parse_word(p, &alpha)?,
                },
                (KindSpec::Skewprimitive, None) => {
                    return Err(invalid(format!(
                        "skew-primitive generator '{}' needs a pair",
                        g.name
                    )))
                }
            });
        }
        let rules = self
            .rules
            .iter()
            .map(|r| {
                Ok(RewriteRule::new(
                    parse_word(&r.lhs, &alpha)?,
                    parse_free(&r.rhs, &alpha)?,
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        HopfPresentation::new(name, Algebra::new(alpha, rules)?, kinds, field)
    }

    /// Builds the presentation and requires an empty axiom report.
    pub fn build(&self, name: &str) -> Result<HopfPresentation> {
        let h = self.construct(name)?;
        if let Some(v) = hopf_axiom_report(&h, 3, 0, 0).first() {
            return Err(Error::AxiomFailure(format!("{name}: {v}")));
        }
        Ok(h)
    }

    /// The file describing `h`, with the precedence written out.
    pub fn from_presentation(h: &HopfPresentation) -> Self {
        let a = h.alphabet();
        let generators = a
            .generators()
            .iter()
            .zip(h.kinds())
            .map(|(g, k)| GeneratorSpec {
                name: g.name.clone(),
                kind: match k {
                    GenKind::GroupLike => KindSpec::Grouplike,
                    GenKind::SkewPrimitive { .. } => KindSpec::Skewprimitive,
                },
                pair: match k {
                    GenKind::GroupLike => None,
                    GenKind::SkewPrimitive { pair } => Some(h.fmt_word(pair)),
                },
                weight: (g.weight != 1).then_some(g.weight),
            })
            .collect();
        let rules = h
            .algebra()
            .rules()
            .iter()
            .map(|r| RuleSpec {
                lhs: h.fmt_word(&r.lhs),
                rhs: h.fmt(&r.rhs),
            })
            .collect();
        let order = a
            .precedence()
            .into_iter()
            .map(|(g, inv)| format!("{}{}", a.generators()[g].name, if inv { "^-1" } else { "" }))
            .collect();
        PresentationFile {
            field: match h.field() {
                None => FieldSpec::Named("Q".into()),
                Some(d) => FieldSpec::Quad { quad: d },
            },
            generators,
            rules,
            order: Some(order),
        }
    }
}

/// Loads and validates a presentation file.
pub fn load_presentation(path: &str) -> Result<HopfPresentation> {
    let text = std::fs::read_to_string(path)?;
    PresentationFile::from_json(&text)?.build(path)
}
