//! Text renderings of arc diagrams.

use std::fmt::Write;

use brickyard_core::{Arc, ArcDiagram, Color, Side};

fn label(i: usize) -> String {
    // a..z, then a1..z1 and so on.
    let c = (b'a' + (i % 26) as u8) as char;
    if i < 26 {
        c.to_string()
    } else {
        format!("{c}{}", i / 26)
    }
}

/// One row per node, top node first, and one column per arc. A column shows
/// `*` at the arc's endpoints and the node's side (`L` or `R`) where the arc
/// passes the node; a legend below names each arc.
pub fn ascii(d: &ArcDiagram) -> String {
    let arcs = d.arcs();
    let labels: Vec<String> = (0..arcs.len()).map(label).collect();
    let width = labels.iter().map(String::len).max().unwrap_or(1).max(1);
    let node_width = d.nodes().to_string().len();
    let mut out = String::new();
    if !arcs.is_empty() {
        let _ = write!(out, "{:>node_width$}  ", "");
        for l in &labels {
            let _ = write!(out, " {l:>width$}");
        }
        out.push('\n');
    }
    for v in (1..=d.nodes()).rev() {
        let _ = write!(out, "{v:>node_width$} o");
        for a in arcs {
            let mark = if v == a.bottom() || v == a.top() {
                "*"
            } else {
                match a.side_at(v) {
                    Some(Side::Left) => "L",
                    Some(Side::Right) => "R",
                    None => ".",
                }
            };
            let _ = write!(out, " {mark:>width$}");
        }
        out.push('\n');
    }
    for (l, a) in labels.iter().zip(arcs) {
        let _ = writeln!(out, "{l} = {a}");
    }
    out
}

/// Horizontal offset of an arc at each node it spans. Longer arcs swing
/// wider so nested arcs stay apart.
fn points(a: &Arc) -> Vec<(f64, usize)> {
    let swing = 0.4 + 0.3 * (a.top() - a.bottom()) as f64;
    (a.bottom()..=a.top())
        .map(|v| {
            let x = match a.side_at(v) {
                Some(Side::Left) => swing,
                Some(Side::Right) => -swing,
                None => 0.0,
            };
            (x, v)
        })
        .collect()
}

/// A standalone LaTeX document drawing the diagram with TikZ.
pub fn tikz(d: &ArcDiagram) -> String {
    let mut out = String::new();
    out.push_str("\\documentclass[tikz]{standalone}\n\\begin{document}\n\\begin{tikzpicture}\n");
    for v in 1..=d.nodes() {
        let _ = writeln!(out, "  \\node[circle,fill,inner sep=1.5pt,label=left:{{${v}$}}] (n{v}) at (0,{v}) {{}};");
    }
    for a in d.arcs() {
        let color = match a.color() {
            Color::Green => "green!60!black",
            Color::Red => "red",
        };
        let coords: Vec<String> = points(a).iter().map(|(x, y)| format!("({x:.2},{y})")).collect();
        let _ = writeln!(
            out,
            "  \\draw[{color},thick] plot[smooth,tension=0.6] coordinates {{{}}};",
            coords.join(" ")
        );
    }
    out.push_str("\\end{tikzpicture}\n\\end{document}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_diagram_is_a_column_of_nodes() {
        assert_eq!(ascii(&ArcDiagram::empty(3)), "3 o\n2 o\n1 o\n");
    }

    #[test]
    fn single_arc() {
        let d = ArcDiagram::noncrossing(2, vec![Arc::short(Color::Green, 1)]).unwrap();
        assert_eq!(ascii(&d), "    a\n2 o *\n1 o *\na = g1-2\n");
        assert!(tikz(&d).contains("coordinates {(0.00,1) (0.00,2)}"));
    }
}
