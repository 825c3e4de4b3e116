//! JSON forms of trees, mutation logs, families and verification reports.
//!
//! A tree file looks like
//!
//! ```json
//! {"multiplicity": 1, "exceptional": "v0",
//!  "rotations": {"v0": ["a"], "v1": ["a", "b"], "v2": ["b"]}}
//! ```
//!
//! where every rotation lists edge labels counterclockwise.

use std::fmt;

use brauer_core::error::TreeViolation;
use brauer_core::tree::RawTree;
use brauer_core::{BrauerTree, Direction, EdgeNumbering, Error, MutationLog, Report, TiltingFamily};
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

/// One problem in an input document, located by JSON pointer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Issue {
    pub pointer: String,
    pub message: String,
}

impl fmt::Display for Issue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let at = if self.pointer.is_empty() { "/" } else { &self.pointer };
        write!(f, "{at}: {}", self.message)
    }
}

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{}", .0.iter().map(|i| i.to_string()).collect::<Vec<_>>().join("\n"))]
    Schema(Vec<Issue>),
}

fn escape(token: &str) -> String {
    token.replace('~', "~0").replace('/', "~1")
}

fn issue(pointer: impl Into<String>, message: impl Into<String>) -> Issue {
    Issue { pointer: pointer.into(), message: message.into() }
}

fn raw_from_value(v: &Value) -> Result<RawTree, Vec<Issue>> {
    let Some(obj) = v.as_object() else {
        return Err(vec![issue("", "expected an object")]);
    };
    let mut issues = Vec::new();
    for key in obj.keys() {
        if !matches!(key.as_str(), "multiplicity" | "exceptional" | "rotations" | "name") {
            issues.push(issue(format!("/{}", escape(key)), "unknown field"));
        }
    }
    let multiplicity = match obj.get("multiplicity") {
        None => {
            issues.push(issue("/multiplicity", "missing field"));
            0
        }
        Some(m) => match m.as_i64() {
            Some(m) => m,
            None => {
                issues.push(issue("/multiplicity", "expected an integer"));
                0
            }
        },
    };
    let exceptional = match obj.get("exceptional") {
        Some(Value::String(s)) => s.clone(),
        Some(_) => {
            issues.push(issue("/exceptional", "expected a vertex id string"));
            String::new()
        }
        None => {
            issues.push(issue("/exceptional", "missing field"));
            String::new()
        }
    };
    let mut rotations = Vec::new();
    match obj.get("rotations") {
        Some(Value::Object(rots)) => {
            for (vid, rot) in rots {
                let at = format!("/rotations/{}", escape(vid));
                let Some(items) = rot.as_array() else {
                    issues.push(issue(at, "expected an array of edge labels"));
                    continue;
                };
                let mut labels = Vec::with_capacity(items.len());
                for (k, item) in items.iter().enumerate() {
                    match item.as_str() {
                        Some(s) => labels.push(s.to_string()),
                        None => issues.push(issue(format!("{at}/{k}"), "expected an edge label string")),
                    }
                }
                rotations.push((vid.clone(), labels));
            }
        }
        Some(_) => issues.push(issue("/rotations", "expected an object mapping vertex ids to rotations")),
        None => issues.push(issue("/rotations", "missing field")),
    }
    if let Some(name) = obj.get("name") {
        if !name.is_string() {
            issues.push(issue("/name", "expected a string"));
        }
    }
    if issues.is_empty() {
        Ok(RawTree { multiplicity, exceptional, rotations })
    } else {
        Err(issues)
    }
}

/// Every place an edge label occurs, as JSON pointers.
fn occurrences(raw: &RawTree, label: &str) -> Vec<String> {
    let mut out = Vec::new();
    for (vid, rot) in &raw.rotations {
        for (k, l) in rot.iter().enumerate() {
            if l == label {
                out.push(format!("/rotations/{}/{k}", escape(vid)));
            }
        }
    }
    out
}

fn locate(raw: &RawTree, v: &TreeViolation) -> Issue {
    let first = |label: &str| occurrences(raw, label).into_iter().next().unwrap_or_else(|| "/rotations".into());
    let pointer = match v {
        TreeViolation::ZeroMultiplicity => "/multiplicity".to_string(),
        TreeViolation::MissingExceptional(_) => "/exceptional".to_string(),
        TreeViolation::DuplicateVertex(id) | TreeViolation::IsolatedVertex(id) => format!("/rotations/{}", escape(id)),
        TreeViolation::DanglingEdge(e) => first(e),
        TreeViolation::OverusedEdge(e, _) => occurrences(raw, e).join(", "),
        TreeViolation::Loop(e) => occurrences(raw, e).get(1).cloned().unwrap_or_else(|| first(e)),
        TreeViolation::NoEdges | TreeViolation::Disconnected | TreeViolation::NotAcyclic => "/rotations".to_string(),
    };
    issue(pointer, v.to_string())
}

pub fn tree_from_value(v: &Value) -> Result<BrauerTree, FormatError> {
    let raw = raw_from_value(v).map_err(FormatError::Schema)?;
    BrauerTree::validate(&raw).map_err(|e| match e {
        Error::InvalidTree(vs) => FormatError::Schema(vs.iter().map(|x| locate(&raw, x)).collect()),
        other => FormatError::Schema(vec![issue("", other.to_string())]),
    })
}

pub fn parse_tree(text: &str) -> Result<BrauerTree, FormatError> {
    tree_from_value(&serde_json::from_str(text)?)
}

pub fn tree_to_value(tree: &BrauerTree) -> Value {
    let raw = tree.to_raw();
    let mut rotations = Map::new();
    for (vid, rot) in raw.rotations {
        rotations.insert(vid, Value::from(rot));
    }
    json!({
        "multiplicity": raw.multiplicity,
        "exceptional": raw.exceptional,
        "rotations": rotations,
    })
}

/// SHA-256 of the compact canonical form of the tree.
pub fn tree_digest(tree: &BrauerTree) -> String {
    let canonical = serde_json::to_string(&tree_to_value(tree)).expect("tree serializes");
    hex::encode(Sha256::digest(canonical.as_bytes()))
}

fn numbering_value(tree: &BrauerTree, n: &EdgeNumbering) -> Value {
    let mut m = Map::new();
    for e in tree.edges() {
        m.insert(tree.label(e).to_string(), Value::from(n.number(e)));
    }
    Value::Object(m)
}

pub fn log_to_value(log: &MutationLog, algorithm: &str) -> Value {
    let tree = &log.original;
    let steps: Vec<Value> = log
        .steps
        .iter()
        .map(|s| {
            json!({
                "direction": match s.direction { Direction::Plus => "+", Direction::Minus => "-" },
                "center": tree.label(s.center),
                "pivots": s.pivots.iter().map(|&p| tree.label(p)).collect::<Vec<_>>(),
                "treeAfter": tree_to_value(&s.after),
            })
        })
        .collect();
    json!({
        "algorithm": algorithm,
        "initialEdge": tree.label(log.initial_edge),
        "steps": steps,
        "naturalNumbering": log.natural_numbering().map(|n| numbering_value(tree, n)),
    })
}

/// Rows of a family; `edges` names the edge behind each row number when
/// the family comes from a numbered tree.
pub fn family_to_value(family: &TiltingFamily, edges: Option<(&BrauerTree, &EdgeNumbering)>) -> Value {
    let rows: Vec<Value> = (1..=family.len() as u32)
        .map(|n| {
            let row = family.row(n);
            let mut terms = Map::new();
            for (k, t) in row.terms() {
                terms.insert(k.to_string(), Value::from(t.clone()));
            }
            let mut diffs = Map::new();
            for (k, d) in row.diffs() {
                let entries: Vec<Vec<String>> =
                    (0..d.rows().len()).map(|r| (0..d.cols().len()).map(|c| d.get(r, c).render()).collect()).collect();
                diffs.insert(k.to_string(), json!(entries));
            }
            let mut v = json!({ "row": n, "terms": terms, "differentials": diffs, "display": row.render_row() });
            if let Some((tree, num)) = edges {
                v["edge"] = Value::from(tree.label(num.edge(n)));
            }
            v
        })
        .collect();
    json!({ "e": family.algebra().e(), "m": family.algebra().m(), "rows": rows })
}

fn failures_value(report: &Report, prefix: bool) -> Vec<Value> {
    report
        .failures
        .iter()
        .map(|f| {
            let label = if prefix { format!("{}: {}", report.mode, f.label) } else { f.label.clone() };
            json!({ "label": label, "expected": f.expected, "actual": f.actual })
        })
        .collect()
}

pub fn report_to_value(tree: &BrauerTree, report: &Report) -> Value {
    json!({
        "mode": report.mode.name(),
        "tree": tree_digest(tree),
        "pass": report.pass(),
        "sigma": report.sigma.as_ref().map(|s| s.to_string()),
        "failures": failures_value(report, false),
    })
}

/// One report for several modes run on the same tree.
pub fn combined_report_value(tree: &BrauerTree, reports: &[Report]) -> Value {
    let sigma = reports.iter().find_map(|r| r.sigma.as_ref()).map(|s| s.to_string());
    let failures: Vec<Value> = reports.iter().flat_map(|r| failures_value(r, true)).collect();
    json!({
        "mode": "all",
        "tree": tree_digest(tree),
        "pass": failures.is_empty(),
        "sigma": sigma,
        "failures": failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const P2: &str = r#"{"multiplicity": 1, "exceptional": "v0",
        "rotations": {"v0": ["a"], "v1": ["a", "b"], "v2": ["b"]}}"#;

    #[test]
    fn parses_and_round_trips() {
        let t = parse_tree(P2).unwrap();
        assert_eq!(t.edge_count(), 2);
        let again = tree_from_value(&tree_to_value(&t)).unwrap();
        assert_eq!(again.to_raw(), t.to_raw());
    }

    #[test]
    fn dangling_edge_is_located() {
        let text = r#"{"multiplicity": 1, "exceptional": "v0",
            "rotations": {"v0": ["a"], "v1": ["a", "b"]}}"#;
        let FormatError::Schema(issues) = parse_tree(text).unwrap_err() else { panic!() };
        assert_eq!(issues[0].pointer, "/rotations/v1/1");
        assert!(issues[0].message.contains("\"b\""));
    }

    #[test]
    fn schema_errors_are_collected() {
        let text = r#"{"multiplicity": "two", "rotations": {"v0": ["a", 3]}, "extra": 1}"#;
        let FormatError::Schema(issues) = parse_tree(text).unwrap_err() else { panic!() };
        let pointers: Vec<&str> = issues.iter().map(|i| i.pointer.as_str()).collect();
        assert_eq!(pointers, ["/extra", "/multiplicity", "/exceptional", "/rotations/v0/1"]);
    }

    #[test]
    fn pointer_tokens_are_escaped() {
        assert_eq!(escape("a/b~c"), "a~1b~0c");
    }

    #[test]
    fn digest_ignores_whitespace() {
        let a = parse_tree(P2).unwrap();
        let b = parse_tree(&P2.replace([' ', '\n'], "")).unwrap();
        assert_eq!(tree_digest(&a), tree_digest(&b));
        assert_eq!(tree_digest(&a).len(), 64);
    }
}
