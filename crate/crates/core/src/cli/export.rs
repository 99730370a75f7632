//! Graphviz DOT rendering of a configuration: tree edges undirected, arcs
//! and arc vertices in blue, root drawn with a double circle.

use std::fmt::Write;

use crate::gconfig::{GConfiguration, ROOT};

pub fn to_dot(config: &GConfiguration) -> String {
    let mut out = String::new();
    writeln!(out, "digraph gconfig {{").unwrap();
    writeln!(out, "  node [shape=circle];").unwrap();
    for v in 1..=config.n() as u32 {
        let v = crate::tree::Vertex(v);
        if v == ROOT {
            writeln!(out, "  {v} [shape=doublecircle, style=bold];").unwrap();
        } else if config.is_arc_vertex(v) {
            writeln!(out, "  {v} [color=blue, fontcolor=blue];").unwrap();
        } else {
            writeln!(out, "  {v};").unwrap();
        }
    }
    for (p, c) in config.tree_edges() {
        writeln!(out, "  {p} -> {c} [dir=none];").unwrap();
    }
    for (s, t) in config.arcs() {
        writeln!(out, "  {s} -> {t} [color=blue];").unwrap();
    }
    writeln!(out, "}}").unwrap();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::Vertex;

    #[test]
    fn single_vertex() {
        let c = GConfiguration::new(1, &[], &[]).unwrap();
        assert_eq!(
            to_dot(&c),
            "digraph gconfig {\n  node [shape=circle];\n  1 [shape=doublecircle, style=bold];\n}\n"
        );
    }

    #[test]
    fn self_loop() {
        let c = GConfiguration::new(2, &[], &[(Vertex(2), Vertex(2))]).unwrap();
        let dot = to_dot(&c);
        assert!(dot.contains("  2 -> 2 [color=blue];\n"));
        assert!(dot.contains("  2 [color=blue, fontcolor=blue];\n"));
        assert!(!dot.contains("dir=none"));
    }
}
