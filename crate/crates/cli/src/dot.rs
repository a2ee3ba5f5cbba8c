use std::fmt::Write;

use ybx_core::growth::DirectedGraph;

/// DOT digraph with vertices `v1..vk`, optional labels, edges in sorted order.
pub fn emit_dot(graph: &DirectedGraph, labels: Option<&[String]>) -> String {
    let mut out = String::from("digraph G {\n");
    for v in 0..graph.vertex_count() {
        match labels {
            Some(l) => writeln!(out, "  v{} [label=\"{}\"];", v + 1, l[v]).unwrap(),
            None => writeln!(out, "  v{};", v + 1).unwrap(),
        }
    }
    for (a, b) in graph.edges() {
        writeln!(out, "  v{} -> v{};", a + 1, b + 1).unwrap();
    }
    out.push_str("}\n");
    out
}
