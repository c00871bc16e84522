use std::fmt::Write;

use super::Graph;
use crate::cover::PathCover;

const PALETTE: [&str; 10] = [
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
    "#bcbd22", "#17becf",
];

/// Renders `g` as a DOT digraph. Without a cover every edge is drawn once
/// with `dir=none`; with a cover every arc is drawn in its path's color and
/// labelled with the path index.
pub fn emit_dot(g: &Graph, cover: Option<&PathCover>) -> String {
    let mut out = String::from("digraph G {\n");
    for v in 0..g.order() {
        writeln!(out, "  {v};").unwrap();
    }
    match cover {
        None => {
            for (u, v) in g.edges() {
                writeln!(out, "  {u} -> {v} [dir=none];").unwrap();
            }
        }
        Some(c) => {
            for (i, p) in c.paths().iter().enumerate() {
                let color = PALETTE[i % PALETTE.len()];
                for (u, v) in p.arcs() {
                    writeln!(out, "  {u} -> {v} [color=\"{color}\", label=\"p{i}\"];").unwrap();
                }
            }
        }
    }
    out.push_str("}\n");
    out
}
