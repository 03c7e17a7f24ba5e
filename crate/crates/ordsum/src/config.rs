//! JSON codec for connective expressions and summand families.
//!
//! A connective is either a catalog leaf `{"base": name, "params": [..]}`
//! (kind inferred from context where possible) or a node object:
//!
//! ```json
//! {"kind": "negation", "node": "ordinal_sum",
//!  "summands": [{"a": 0.2, "b": 0.5, "connective": {"base": "standard"}}]}
//! ```
//!
//! Node types: `ordinal_sum` (implication families also need `"variant":
//! "rescher" | "left"`), `n_dual` (`inner`, `negation`), `inverse`
//! (`inner`), `natural_negation` (`inner` must carry its own `kind`),
//! `natneg_tnorm_closed_form` and `natneg_tconorm_closed_form` (`summands`,
//! optional `sub_negations`). Nesting is allowed anywhere a connective is
//! expected. Serialization is canonical (sorted keys, shortest round-trip
//! numbers), so digests and round-trips are stable.

use crate::analysis::{invert_strict_negation, AnalysisBudget};
use crate::connective::{make_connective, n_dual, ConnectiveExpr, ConnectiveKind};
use crate::error::{Error, Result};
use crate::natural_negation::{
    closed_form_natneg_tconorm_sum, closed_form_natneg_tnorm_sum, natneg_of_tconorm_summand,
    natneg_of_tnorm_summand, natural_negation_implication, natural_negation_tconorm,
    natural_negation_tnorm, SupInfOracleConfig,
};
use crate::ordinal_sum::{Summand, SummandFamily, SumVariant};
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

fn err(path: &str, message: impl Into<String>) -> Error {
    Error::Config {
        path: path.to_string(),
        message: message.into(),
    }
}

/// Parses a JSON document into an expression. The top level must determine
/// its own kind.
pub fn expr_from_str(
    s: &str,
    budget: &AnalysisBudget,
    oracle: &SupInfOracleConfig,
) -> Result<ConnectiveExpr> {
    let value: Value = serde_json::from_str(s).map_err(|e| {
        Error::ConfigSyntax(format!("line {}, column {}: {}", e.line(), e.column(), e))
    })?;
    expr_from_json(&value, budget, oracle)
}

pub fn expr_from_json(
    value: &Value,
    budget: &AnalysisBudget,
    oracle: &SupInfOracleConfig,
) -> Result<ConnectiveExpr> {
    parse_connective(value, None, "$", budget, oracle)
}

/// Parses a JSON document into a summand family.
pub fn family_from_str(
    s: &str,
    budget: &AnalysisBudget,
    oracle: &SupInfOracleConfig,
) -> Result<SummandFamily> {
    let value: Value = serde_json::from_str(s).map_err(|e| {
        Error::ConfigSyntax(format!("line {}, column {}: {}", e.line(), e.column(), e))
    })?;
    family_from_json(&value, budget, oracle)
}

pub fn family_from_json(
    value: &Value,
    budget: &AnalysisBudget,
    oracle: &SupInfOracleConfig,
) -> Result<SummandFamily> {
    let obj = as_object(value, "$")?;
    let variant = parse_variant(obj, "$")?;
    parse_family(obj, variant, "$", budget, oracle)
}

/// Canonical JSON for an expression; parsing it back yields an expression
/// that evaluates bit-identically.
pub fn expr_to_json(expr: &ConnectiveExpr) -> Value {
    match expr {
        ConnectiveExpr::Base(b) => {
            let mut m = Map::new();
            m.insert("kind".into(), json!(b.kind().name()));
            m.insert("base".into(), json!(b.name()));
            let params = b.params();
            if !params.is_empty() {
                m.insert("params".into(), json!(params));
            }
            Value::Object(m)
        }
        ConnectiveExpr::OrdinalSum(f) => family_to_json_with_node(f, "ordinal_sum"),
        ConnectiveExpr::NDual {
            inner, negation, ..
        } => json!({
            "kind": expr.kind().name(),
            "node": "n_dual",
            "inner": expr_to_json(inner),
            "negation": expr_to_json(negation),
        }),
        ConnectiveExpr::Inverse { inner, tolerance } => json!({
            "kind": "negation",
            "node": "inverse",
            "inner": expr_to_json(inner),
            "tolerance": tolerance,
        }),
        ConnectiveExpr::NaturalNegation { inner, oracle } => json!({
            "kind": "negation",
            "node": "natural_negation",
            "inner": expr_to_json(inner),
            "oracle": {
                "tolerance": oracle.tolerance,
                "max_bisection_steps": oracle.max_bisection_steps,
                "zero_test_epsilon": oracle.zero_test_epsilon,
            },
        }),
        ConnectiveExpr::ClosedFormNatNegTNorm {
            family,
            sub_negations,
        } => json!({
            "kind": "negation",
            "node": "natneg_tnorm_closed_form",
            "summands": summands_to_json(family),
            "variant": family.variant().name(),
            "sub_negations": sub_negations.iter().map(expr_to_json).collect::<Vec<_>>(),
        }),
        ConnectiveExpr::ClosedFormNatNegTConorm {
            family,
            sub_negations,
        } => json!({
            "kind": "negation",
            "node": "natneg_tconorm_closed_form",
            "summands": summands_to_json(family),
            "variant": family.variant().name(),
            "sub_negations": sub_negations.iter().map(expr_to_json).collect::<Vec<_>>(),
        }),
    }
}

pub fn family_to_json(family: &SummandFamily) -> Value {
    json!({
        "kind": family.kind().name(),
        "variant": family.variant().name(),
        "summands": summands_to_json(family),
    })
}

/// SHA-256 of the canonical family serialization; identifies a family in
/// reports and CSV output.
pub fn family_digest(family: &SummandFamily) -> String {
    let canonical = serde_json::to_string(&family_to_json(family)).expect("valid json");
    let mut hasher = Sha256::new();
    hasher.update(canonical.as_bytes());
    let digest = hasher.finalize();
    let mut out = String::with_capacity(16);
    for byte in digest.iter().take(8) {
        out.push_str(&format!("{byte:02x}"));
    }
    out
}

fn summands_to_json(family: &SummandFamily) -> Value {
    Value::Array(
        family
            .summands()
            .iter()
            .map(|s| {
                json!({
                    "a": s.a(),
                    "b": s.b(),
                    "connective": expr_to_json(s.connective()),
                })
            })
            .collect(),
    )
}

fn family_to_json_with_node(family: &SummandFamily, node: &str) -> Value {
    json!({
        "kind": family.kind().name(),
        "node": node,
        "variant": family.variant().name(),
        "summands": summands_to_json(family),
    })
}

fn as_object<'v>(value: &'v Value, path: &str) -> Result<&'v Map<String, Value>> {
    value
        .as_object()
        .ok_or_else(|| err(path, "expected an object"))
}

fn get_kind(obj: &Map<String, Value>, path: &str) -> Result<Option<ConnectiveKind>> {
    match obj.get("kind") {
        None => Ok(None),
        Some(Value::String(s)) => ConnectiveKind::parse(s)
            .map(Some)
            .ok_or_else(|| err(path, format!("unknown kind `{s}`"))),
        Some(_) => Err(err(path, "kind must be a string")),
    }
}

fn effective_kind(
    obj: &Map<String, Value>,
    context: Option<ConnectiveKind>,
    path: &str,
) -> Result<ConnectiveKind> {
    match (get_kind(obj, path)?, context) {
        (Some(k), _) => Ok(k),
        (None, Some(k)) => Ok(k),
        (None, None) => Err(err(
            path,
            "kind is required here (none can be inferred from context)",
        )),
    }
}

fn get_f64(value: &Value, path: &str) -> Result<f64> {
    value
        .as_f64()
        .ok_or_else(|| err(path, "expected a number"))
}

fn parse_params(obj: &Map<String, Value>, path: &str) -> Result<Vec<f64>> {
    match obj.get("params") {
        None => Ok(Vec::new()),
        Some(Value::Array(items)) => items
            .iter()
            .enumerate()
            .map(|(i, v)| get_f64(v, &format!("{path}/params[{i}]")))
            .collect(),
        Some(_) => Err(err(path, "params must be an array of numbers")),
    }
}

fn parse_variant(obj: &Map<String, Value>, path: &str) -> Result<SumVariant> {
    let kind = effective_kind(obj, None, path)?;
    match kind {
        ConnectiveKind::Negation => Ok(SumVariant::Negation),
        ConnectiveKind::TNorm => Ok(SumVariant::TNorm),
        ConnectiveKind::TConorm => Ok(SumVariant::TConorm),
        ConnectiveKind::Implication => match obj.get("variant") {
            Some(Value::String(s)) => match SumVariant::parse(s) {
                Some(v @ (SumVariant::ImplicationRescher | SumVariant::ImplicationLeft)) => Ok(v),
                _ => Err(err(path, format!("unknown implication variant `{s}`"))),
            },
            _ => Err(err(
                path,
                "implication families need \"variant\": \"rescher\" or \"left\"",
            )),
        },
    }
}

fn parse_family(
    obj: &Map<String, Value>,
    variant: SumVariant,
    path: &str,
    budget: &AnalysisBudget,
    oracle: &SupInfOracleConfig,
) -> Result<SummandFamily> {
    let items = match obj.get("summands") {
        Some(Value::Array(items)) => items,
        _ => return Err(err(path, "missing summands array")),
    };
    let mut summands = Vec::with_capacity(items.len());
    for (i, item) in items.iter().enumerate() {
        let spath = format!("{path}/summands[{i}]");
        let sobj = as_object(item, &spath)?;
        let a = get_f64(
            sobj.get("a").ok_or_else(|| err(&spath, "missing a"))?,
            &format!("{spath}/a"),
        )?;
        let b = get_f64(
            sobj.get("b").ok_or_else(|| err(&spath, "missing b"))?,
            &format!("{spath}/b"),
        )?;
        let cval = sobj
            .get("connective")
            .ok_or_else(|| err(&spath, "missing connective"))?;
        let connective = parse_connective(
            cval,
            Some(variant.kind()),
            &format!("{spath}/connective"),
            budget,
            oracle,
        )?;
        summands.push(
            Summand::new(a, b, connective).map_err(|e| err(&spath, e.to_string()))?,
        );
    }
    SummandFamily::new(variant, summands).map_err(|e| err(path, e.to_string()))
}

fn parse_oracle(
    obj: &Map<String, Value>,
    path: &str,
    default: &SupInfOracleConfig,
) -> Result<SupInfOracleConfig> {
    match obj.get("oracle") {
        None => Ok(*default),
        Some(v) => {
            let o = as_object(v, &format!("{path}/oracle"))?;
            let tolerance = match o.get("tolerance") {
                Some(v) => get_f64(v, &format!("{path}/oracle/tolerance"))?,
                None => default.tolerance,
            };
            let steps = match o.get("max_bisection_steps") {
                Some(v) => get_f64(v, &format!("{path}/oracle/max_bisection_steps"))? as u32,
                None => default.max_bisection_steps,
            };
            let eps = match o.get("zero_test_epsilon") {
                Some(v) => get_f64(v, &format!("{path}/oracle/zero_test_epsilon"))?,
                None => default.zero_test_epsilon,
            };
            SupInfOracleConfig::new(tolerance, steps, eps)
                .map_err(|e| err(&format!("{path}/oracle"), e.to_string()))
        }
    }
}

fn parse_connective(
    value: &Value,
    context: Option<ConnectiveKind>,
    path: &str,
    budget: &AnalysisBudget,
    oracle: &SupInfOracleConfig,
) -> Result<ConnectiveExpr> {
    let obj = as_object(value, path)?;

    if let Some(base) = obj.get("base") {
        let name = base
            .as_str()
            .ok_or_else(|| err(path, "base must be a string"))?;
        let kind = effective_kind(obj, context, path)?;
        let params = parse_params(obj, path)?;
        return make_connective(kind, name, &params).map_err(|e| err(path, e.to_string()));
    }

    let node = match obj.get("node") {
        Some(Value::String(s)) => s.as_str(),
        _ => return Err(err(path, "expected \"base\" or \"node\"")),
    };

    match node {
        "ordinal_sum" => {
            let kind = effective_kind(obj, context, path)?;
            let variant = match kind {
                ConnectiveKind::Negation => SumVariant::Negation,
                ConnectiveKind::TNorm => SumVariant::TNorm,
                ConnectiveKind::TConorm => SumVariant::TConorm,
                ConnectiveKind::Implication => match obj.get("variant") {
                    Some(Value::String(s)) => match SumVariant::parse(s) {
                        Some(
                            v @ (SumVariant::ImplicationRescher | SumVariant::ImplicationLeft),
                        ) => v,
                        _ => {
                            return Err(err(path, format!("unknown implication variant `{s}`")))
                        }
                    },
                    _ => {
                        return Err(err(
                            path,
                            "implication ordinal sums need \"variant\": \"rescher\" or \"left\"",
                        ))
                    }
                },
            };
            let family = parse_family(obj, variant, path, budget, oracle)?;
            Ok(ConnectiveExpr::OrdinalSum(family))
        }
        "n_dual" => {
            let kind = effective_kind(obj, context, path)?;
            let inner_context = match kind {
                ConnectiveKind::TNorm => Some(ConnectiveKind::TConorm),
                ConnectiveKind::TConorm => Some(ConnectiveKind::TNorm),
                _ => None,
            };
            let inner = parse_connective(
                obj.get("inner")
                    .ok_or_else(|| err(path, "missing inner"))?,
                inner_context,
                &format!("{path}/inner"),
                budget,
                oracle,
            )?;
            let negation = parse_connective(
                obj.get("negation")
                    .ok_or_else(|| err(path, "missing negation"))?,
                Some(ConnectiveKind::Negation),
                &format!("{path}/negation"),
                budget,
                oracle,
            )?;
            n_dual(inner, negation).map_err(|e| err(path, e.to_string()))
        }
        "inverse" => {
            let inner = parse_connective(
                obj.get("inner")
                    .ok_or_else(|| err(path, "missing inner"))?,
                Some(ConnectiveKind::Negation),
                &format!("{path}/inner"),
                budget,
                oracle,
            )?;
            invert_strict_negation(&inner, budget).map_err(|e| err(path, e.to_string()))
        }
        "natural_negation" => {
            let inner_value = obj
                .get("inner")
                .ok_or_else(|| err(path, "missing inner"))?;
            let inner = parse_connective(
                inner_value,
                None,
                &format!("{path}/inner"),
                budget,
                oracle,
            )?;
            let cfg = parse_oracle(obj, path, oracle)?;
            match inner.kind() {
                ConnectiveKind::TNorm => natural_negation_tnorm(&inner, cfg),
                ConnectiveKind::TConorm => natural_negation_tconorm(&inner, cfg),
                ConnectiveKind::Implication => natural_negation_implication(&inner),
                ConnectiveKind::Negation => Err(Error::KindMismatch {
                    expected: "tnorm, tconorm or implication".into(),
                    found: "negation".into(),
                }),
            }
            .map_err(|e| err(path, e.to_string()))
        }
        "natneg_tnorm_closed_form" => {
            let family = parse_family(obj, SumVariant::TNorm, path, budget, oracle)?;
            let cfg = parse_oracle(obj, path, oracle)?;
            let subs = parse_sub_negations(obj, &family, path, budget, oracle, |t| {
                natneg_of_tnorm_summand(t, cfg)
            })?;
            closed_form_natneg_tnorm_sum(&family, subs).map_err(|e| err(path, e.to_string()))
        }
        "natneg_tconorm_closed_form" => {
            let family = parse_family(obj, SumVariant::TConorm, path, budget, oracle)?;
            let cfg = parse_oracle(obj, path, oracle)?;
            let subs = parse_sub_negations(obj, &family, path, budget, oracle, |s| {
                natneg_of_tconorm_summand(s, cfg)
            })?;
            closed_form_natneg_tconorm_sum(&family, subs).map_err(|e| err(path, e.to_string()))
        }
        other => Err(err(path, format!("unknown node type `{other}`"))),
    }
}

fn parse_sub_negations(
    obj: &Map<String, Value>,
    family: &SummandFamily,
    path: &str,
    budget: &AnalysisBudget,
    oracle: &SupInfOracleConfig,
    auto: impl Fn(&ConnectiveExpr) -> Result<ConnectiveExpr>,
) -> Result<Vec<ConnectiveExpr>> {
    match obj.get("sub_negations") {
        None => family.summands().iter().map(|s| auto(s.connective())).collect(),
        Some(Value::Array(items)) => items
            .iter()
            .enumerate()
            .map(|(i, v)| {
                parse_connective(
                    v,
                    Some(ConnectiveKind::Negation),
                    &format!("{path}/sub_negations[{i}]"),
                    budget,
                    oracle,
                )
            })
            .collect(),
        Some(_) => Err(err(path, "sub_negations must be an array")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::unit::unit_grid;

    fn parse(s: &str) -> Result<ConnectiveExpr> {
        expr_from_str(s, &AnalysisBudget::default(), &SupInfOracleConfig::default())
    }

    #[test]
    fn parses_the_reference_example() {
        let expr = parse(
            r#"{"kind":"negation","node":"ordinal_sum",
                "summands":[{"a":0.2,"b":0.5,"connective":{"base":"standard"}}]}"#,
        )
        .unwrap();
        assert!((expr.eval1(0.35).unwrap() - 0.65).abs() < 1e-15);
    }

    #[test]
    fn roundtrip_evaluates_bit_identically() {
        let exprs = [
            r#"{"kind":"negation","base":"power_complement","params":[2.5]}"#,
            r#"{"kind":"negation","node":"ordinal_sum","summands":[
                {"a":0.125,"b":0.25,"connective":{"base":"root_complement","params":[3.0]}},
                {"a":0.5,"b":0.75,"connective":{"node":"ordinal_sum",
                    "summands":[{"a":0.0,"b":1.0,"connective":{"base":"standard"}}]}}]}"#,
            r#"{"kind":"negation","node":"natural_negation",
                "inner":{"kind":"tnorm","node":"ordinal_sum",
                         "summands":[{"a":0.0,"b":0.5,"connective":{"base":"lukasiewicz"}}]}}"#,
            r#"{"kind":"negation","node":"inverse",
                "inner":{"kind":"negation","node":"ordinal_sum","summands":[
                    {"a":0.25,"b":0.5,"connective":{"base":"power_complement","params":[2.0]}}]}}"#,
            r#"{"kind":"tconorm","node":"n_dual","inner":{"base":"lukasiewicz"},
                "negation":{"kind":"negation","base":"standard"}}"#,
        ];
        for src in exprs {
            let expr = parse(src).unwrap();
            let json = expr_to_json(&expr);
            let back = expr_from_json(
                &json,
                &AnalysisBudget::default(),
                &SupInfOracleConfig::default(),
            )
            .unwrap();
            match expr.arity() {
                1 => {
                    for x in unit_grid(101) {
                        let a = expr.eval1(x).unwrap();
                        let b = back.eval1(x).unwrap();
                        assert!(a == b, "{src} at {x}: {a} vs {b}");
                    }
                }
                _ => {
                    for x in unit_grid(21) {
                        for y in unit_grid(21) {
                            let a = expr.eval2(x, y).unwrap();
                            let b = back.eval2(x, y).unwrap();
                            assert!(a == b, "{src} at ({x},{y}): {a} vs {b}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn syntax_errors_carry_position() {
        let e = parse("{\"kind\": \n nope}").unwrap_err();
        let msg = e.to_string();
        assert!(msg.contains("line"), "{msg}");
    }

    #[test]
    fn semantic_errors_carry_path() {
        let e = parse(
            r#"{"kind":"negation","node":"ordinal_sum",
                "summands":[{"a":0.5,"b":0.2,"connective":{"base":"standard"}}]}"#,
        )
        .unwrap_err();
        assert!(e.to_string().contains("summands[0]"), "{e}");
    }

    #[test]
    fn ambiguous_kind_is_rejected() {
        // "godel" exists as t-norm, t-conorm and implication: no context here
        let e = parse(r#"{"base":"godel"}"#).unwrap_err();
        assert!(e.to_string().contains("kind"), "{e}");
    }

    #[test]
    fn family_digest_is_stable_and_distinguishes() {
        let f1 = family_from_str(
            r#"{"kind":"negation","summands":[{"a":0.2,"b":0.5,"connective":{"base":"standard"}}]}"#,
            &AnalysisBudget::default(),
            &SupInfOracleConfig::default(),
        )
        .unwrap();
        let f2 = family_from_str(
            r#"{"kind":"negation","summands":[{"a":0.2,"b":0.6,"connective":{"base":"standard"}}]}"#,
            &AnalysisBudget::default(),
            &SupInfOracleConfig::default(),
        )
        .unwrap();
        assert_eq!(family_digest(&f1), family_digest(&f1));
        assert_ne!(family_digest(&f1), family_digest(&f2));
    }
}
