//! Text output: Graphviz diagrams of trees and row tables of families.

use std::fmt::Write;

use brauer_core::{BrauerTree, EdgeNumbering, Pointing, TiltingFamily};

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Undirected DOT graph. The exceptional vertex is filled; edges carry their
/// number when a numbering is given, and each pointed vertex records its
/// sector as `point="a|b"`.
pub fn render_dot(tree: &BrauerTree, pointing: Option<&Pointing>, numbering: Option<&EdgeNumbering>) -> String {
    let mut out = String::new();
    writeln!(out, "graph brauer {{").unwrap();
    writeln!(out, "  node [shape=circle, width=0.2, label=\"\"];").unwrap();
    writeln!(out, "  // multiplicity {}", tree.multiplicity()).unwrap();
    for v in tree.vertices() {
        let rot: Vec<&str> = tree.rotation(v).iter().map(|&e| tree.label(e)).collect();
        let mut attrs = vec![format!("rotation={}", quote(&rot.join(" ")))];
        if v == tree.exceptional() {
            attrs.push("style=filled".into());
            attrs.push("fillcolor=black".into());
        }
        if let Some((a, b)) = pointing.and_then(|p| p.sector(v)) {
            attrs.push(format!("point={}", quote(&format!("{}|{}", tree.label(a), tree.label(b)))));
        }
        writeln!(out, "  {} [{}];", quote(tree.vertex_name(v)), attrs.join(", ")).unwrap();
    }
    for e in tree.edges() {
        let [a, b] = tree.ends(e);
        let label = match numbering {
            Some(n) => n.number(e).to_string(),
            None => tree.label(e).to_string(),
        };
        writeln!(
            out,
            "  {} -- {} [label={}, id={}];",
            quote(tree.vertex_name(a)),
            quote(tree.vertex_name(b)),
            quote(&label),
            quote(tree.label(e))
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

/// One line per row, `name_n: 0 → P_i → P_k → 0`, with the degree range of
/// the row and, when known, the edge it belongs to.
pub fn render_table(name: &str, family: &TiltingFamily, edges: Option<(&BrauerTree, &EdgeNumbering)>) -> String {
    let mut out = String::new();
    for n in 1..=family.len() as u32 {
        let row = family.row(n);
        let range = match (row.min_degree(), row.max_degree()) {
            (Some(lo), Some(hi)) if lo == hi => format!("[{lo}]"),
            (Some(lo), Some(hi)) => format!("[{lo}..{hi}]"),
            _ => "[]".into(),
        };
        let edge = edges.map(|(t, num)| format!("  edge {}", t.label(num.edge(n)))).unwrap_or_default();
        writeln!(out, "{name}_{n}: {}  {range}{edge}", row.render_row()).unwrap();
    }
    out
}

/// Rotations, distances and the Cartan matrix under a numbering.
pub fn render_summary(tree: &BrauerTree, numbering: &EdgeNumbering) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "edges {}, multiplicity {}, exceptional {}",
        tree.edge_count(),
        tree.multiplicity(),
        tree.vertex_name(tree.exceptional())
    )
    .unwrap();
    for v in tree.vertices() {
        let rot: Vec<&str> = tree.rotation(v).iter().map(|&e| tree.label(e)).collect();
        writeln!(out, "  {} (distance {}): {}", tree.vertex_name(v), tree.distance(v), rot.join(" ")).unwrap();
    }
    let nums: Vec<String> = tree.edges().map(|e| format!("{}={}", tree.label(e), numbering.number(e))).collect();
    writeln!(out, "numbering: {}", nums.join(", ")).unwrap();
    writeln!(out, "cartan:").unwrap();
    for row in tree.cartan_matrix(numbering) {
        let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
        writeln!(out, "  {}", cells.join(" ")).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use brauer_core::PointingKind;

    #[test]
    fn star_dot_has_filled_center() {
        let s = BrauerTree::star(3, 1).unwrap();
        let dot = render_dot(&s, None, None);
        assert_eq!(dot.matches(" -- ").count(), 3);
        assert_eq!(dot.matches("rotation=").count(), 4);
        assert!(dot.contains("\"v0\" [rotation=\"1 2 3\", style=filled, fillcolor=black];"));
        assert_eq!(dot, render_dot(&s, None, None));
    }

    #[test]
    fn numbering_labels_edges() {
        let t = BrauerTree::linear(2, 1).unwrap();
        let p = t.make_pointing(PointingKind::Reversed);
        let n = t.numbering_from_pointing(&p, t.default_initial_edge()).unwrap();
        let dot = render_dot(&t, Some(&p), Some(&n));
        assert!(dot.contains("\"v0\" -- \"v1\" [label=\"2\", id=\"1\"];"));
        assert!(dot.contains("\"v1\" -- \"v2\" [label=\"1\", id=\"2\"];"));
        assert!(dot.contains("point=\"2|1\""));
    }

    #[test]
    fn quoting_escapes() {
        assert_eq!(quote("a\"b"), "\"a\\\"b\"");
    }
}
