//! LaTeX rendering in boxed notation.
//!
//! Edges are drawn unoriented, so each coefficient is multiplied back by
//! `n^k` per vertex of scale `n` and valence `k`. Paths are drawn as chains;
//! other graphs as boxes followed by their edge list.

use std::fmt::Write;

use num_traits::{One, Signed, Zero};

use crate::graph::{ColoredMultigraph, GraphSeries};
use crate::rational::{self, Q};

use super::params::{scale_label, TorusParams};
use super::trees::{Decoration, DecoratedTree};

fn frac_tex(x: &Q) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", x.numer(), x.denom())
    }
}

fn boxed(label: &str) -> String {
    format!("\\fbox{{${label}$}}")
}

fn edge_tex(mult: usize) -> String {
    match mult {
        1 => "\\!-\\!".into(),
        2 => "\\!=\\!".into(),
        3 => "\\!\\equiv\\!".into(),
        m => format!("\\!\\overset{{{m}}}{{-}}\\!"),
    }
}

/// Vertex order and edge multiplicities when `g` is a path.
fn as_path(g: &ColoredMultigraph) -> Option<(Vec<usize>, Vec<usize>)> {
    let n = g.vertex_count();
    if n == 1 {
        return Some((vec![0], vec![]));
    }
    if !g.is_connected() {
        return None;
    }
    let mut nbrs: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v)).collect();
    for l in &mut nbrs {
        l.sort_unstable();
        l.dedup();
    }
    if nbrs.iter().any(|l| l.len() > 2) || nbrs.iter().filter(|l| l.len() == 1).count() != 2 {
        return None;
    }
    let mut order = vec![nbrs.iter().position(|l| l.len() == 1)?];
    while order.len() < n {
        let last = *order.last()?;
        let next = *nbrs[last].iter().find(|v| !order.contains(v))?;
        order.push(next);
    }
    let mult = order
        .windows(2)
        .map(|w| {
            let (i, j) = (w[0].min(w[1]), w[0].max(w[1]));
            g.edges().iter().filter(|&&e| e == (i, j)).count()
        })
        .collect();
    Some((order, mult))
}

fn graph_tex(g: &ColoredMultigraph) -> String {
    let label = |v: usize| scale_label(g.colors()[v]);
    if let Some((order, mult)) = as_path(g) {
        let mut s = boxed(label(order[0]));
        for (k, &v) in order.iter().enumerate().skip(1) {
            s += &edge_tex(mult[k - 1]);
            s += &boxed(label(v));
        }
        return s;
    }
    let mut s: String = (0..g.vertex_count()).map(|v| format!("{}_{{{v}}}", boxed(label(v)))).collect();
    let edges: Vec<String> = g.edges().iter().map(|(i, j)| format!("{i}{j}")).collect();
    let _ = write!(s, "\\,[{}]", edges.join(","));
    s
}

fn signed_terms(terms: impl Iterator<Item = (Q, String)>) -> String {
    let mut out = String::new();
    for (i, (c, body)) in terms.enumerate() {
        let sign = if c.is_negative() { "-" } else if i > 0 { "+" } else { "" };
        let a = c.abs();
        let coeff = if a.is_one() { String::new() } else { frac_tex(&a) + "\\," };
        let _ = write!(out, "{sign}{coeff}{body}");
        out.push('\n');
    }
    if out.is_empty() {
        out.push_str("0\n");
    }
    out
}

/// Boxed coefficient: the stored one times `n^k` per vertex.
fn boxed_coeff(g: &ColoredMultigraph, c: &Q, params: &TorusParams) -> Q {
    g.colors()
        .iter()
        .zip(g.valences())
        .fold(c.clone(), |acc, (&col, k)| acc * rational::pow(&params.scale_q(col), k as i64))
}

/// A displayed equation for a graph series.
pub fn series_latex(name: &str, x: &GraphSeries, params: &TorusParams) -> String {
    let body = signed_terms(
        x.iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(g, c)| (boxed_coeff(g, c, params), graph_tex(g))),
    );
    format!("\\begin{{multline*}}\n{name} = {body}\\end{{multline*}}\n")
}

fn decoration_tex(t: &DecoratedTree) -> String {
    let parts: Vec<String> = t
        .vertices
        .iter()
        .map(|v| match v.decoration() {
            Decoration::Wheel => format!("f({}h)", v.scale),
            Decoration::DerivedH(i) => {
                let c = &v.normalization * rational::frac(1, 4);
                let d = if i == 0 { String::new() } else { format!("D^{{{i}}}") };
                format!("{}\\,{d}h(t^{{{}}})", frac_tex(&c), v.scale)
            }
        })
        .collect();
    parts.join(",\\ ")
}

/// A table of decorated trees.
pub fn trees_latex(trees: &[DecoratedTree]) -> String {
    let mut out = String::from("\\begin{tabular}{lll}\ncoefficient & tree & decorations\\\\\n\\hline\n");
    for t in trees {
        let _ = writeln!(
            out,
            "${}$ & {} & ${}$\\\\",
            frac_tex(&t.coefficient),
            graph_tex(&t.tree),
            decoration_tex(t)
        );
    }
    out.push_str("\\end{tabular}\n");
    out
}

/// Wraps a body into a standalone document.
pub fn document(body: &str) -> String {
    format!(
        "\\documentclass{{article}}\n\\usepackage{{amsmath}}\n\\begin{{document}}\n{body}\\end{{document}}\n"
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Color;
    use crate::torus::{x_pq_limit, y_rat};

    #[test]
    fn path_detection() {
        let g = ColoredMultigraph::path(&[Color::A, Color::B, Color::A], &[1, 2]).unwrap();
        let (order, mult) = as_path(&g).unwrap();
        assert_eq!(order.len(), 3);
        let mut m = mult.clone();
        m.sort();
        assert_eq!(m, vec![1, 2]);
        let tri = ColoredMultigraph::new(vec![Color::A; 3], vec![(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(as_path(&tri).is_none());
    }

    #[test]
    fn boxed_coefficients_are_integral_for_x_pq() {
        let params = TorusParams::new(2, 3, 1).unwrap();
        let tex = series_latex("X_{2,3}", &x_pq_limit(&params).unwrap(), &params);
        assert!(tex.contains("\\fbox{$p$}\\!-\\!\\fbox{$q$}"));
        assert!(!tex.contains("frac"));
    }

    #[test]
    fn balanced_document() {
        let params = TorusParams::new(2, 3, 2).unwrap();
        let doc = document(&trees_latex(&y_rat(&params).unwrap()));
        assert_eq!(doc.matches('{').count(), doc.matches('}').count());
        assert_eq!(doc.matches('$').count() % 2, 0);
        assert!(doc.starts_with("\\documentclass"));
    }
}
