//! Boxed notation for small gluing-graph series.
//!
//! A term is an optional sign and rational coefficient followed by a path of
//! boxes joined by edge symbols written without spaces:
//!
//! | symbol | edge                                   |
//! |--------|----------------------------------------|
//! | `-`    | one unoriented edge                    |
//! | `=`    | two unoriented edges                   |
//! | `#`    | three unoriented edges                 |
//! | `->`   | one edge, tail on the left             |
//! | `<-`   | one edge, tail on the right            |
//! | `>>`   | two edges, tails on the left           |
//! | `<<`   | two edges, tails on the right          |
//!
//! A box holds a signed sum of `1`, `p`, `q`, `pq` (colors `*`, `a`, `b`,
//! `c`) and expands multilinearly. Each diagram is divided, per vertex, by
//! its scale raised to the number of incident edge ends that are not
//! arrowheads into it.
//!
//! ```
//! use torus_ki::graph::{Color, ColoredMultigraph};
//! use torus_ki::rational::frac;
//! use torus_ki::torus::{parse_boxed, TorusParams};
//! let params = TorusParams::new(2, 3, 2).unwrap();
//! let s = parse_boxed("[pq]->[p]<-[q]", &params).unwrap();
//! let g = ColoredMultigraph::path(&[Color::C, Color::A, Color::B], &[1, 1]).unwrap();
//! assert_eq!(s.coeff(&g), frac(1, 2 * 3 * 3));
//! ```

use num_traits::One;

use crate::error::{Error, Result};
use crate::graph::{Color, ColoredMultigraph, GraphSeries, Truncation};
use crate::rational::{self, Q};

use super::params::TorusParams;

/// Terms of `X^{-1}_pq` with at most two edges.
pub const OMEGA_MINUS_ONE: &str = "[p] + [q] + [p]-[q] + [p]=[q] + 1/2 [p]-[q]-[p] + 1/2 [q]-[p]-[q]";

/// Terms of `X^1` with at most two edges.
pub const OMEGA_ONE: &str = "[1] + [p+q-pq]<-[1] + [p+q-pq]<<[1] + 1/2 [1]->[p+q-pq]<-[1] \
     + 1/2 [p+q-pq]<-[1]->[p+q-pq] + [1]->[p]-[q] + [1]->[q]-[p]";

/// Terms of `X^2 - X^1` with at most two edges.
pub const OMEGA_TWO_MINUS_ONE: &str = "- [p+q-pq]<-[pq]<-[1] - [1]->[p+q-pq]<-[pq]";

/// Terms of `X_{p,q}` with at most two edges.
pub const X_PQ: &str = "[p] + [q] - [pq] + [p]-[q] - [p+q-pq]<-[pq] + [p]=[q] - [p+q-pq]<<[pq] \
     + 1/2 [p]-[q]-[p] + 1/2 [q]-[p]-[q] + 1/2 [pq]->[p+q-pq]<-[pq] \
     - 1/2 [p+q-pq]<-[pq]->[p+q-pq] - [pq]->[p]-[q] - [pq]->[q]-[p] + [p+q-pq]<-[pq]<-[pq]";

#[derive(Clone, Copy, Debug, PartialEq)]
struct EdgeSym {
    mult: usize,
    /// Ends counted at the left and right vertex.
    left: usize,
    right: usize,
}

fn edge_symbol(s: &str) -> Option<(EdgeSym, usize)> {
    let table = [
        ("->", 1, 1, 0),
        ("<-", 1, 0, 1),
        (">>", 2, 2, 0),
        ("<<", 2, 0, 2),
        ("-", 1, 1, 1),
        ("=", 2, 2, 2),
        ("#", 3, 3, 3),
    ];
    table.iter().find(|(sym, ..)| s.starts_with(sym)).map(|&(sym, mult, left, right)| {
        (EdgeSym { mult, left, right }, sym.len())
    })
}

struct Term {
    coeff: Q,
    boxes: Vec<Vec<(i64, Color)>>,
    edges: Vec<EdgeSym>,
}

fn parse_box(s: &str) -> Result<Vec<(i64, Color)>> {
    let bad = || Error::Parse(format!("bad box content {s:?}"));
    let mut out = Vec::new();
    let mut rest = s.trim();
    let mut sign = 1;
    if let Some(r) = rest.strip_prefix('-') {
        sign = -1;
        rest = r;
    }
    loop {
        let end = rest.find(['+', '-']).unwrap_or(rest.len());
        let color = match rest[..end].trim() {
            "1" => Color::ACTIVE,
            "p" => Color::A,
            "q" => Color::B,
            "pq" | "qp" => Color::C,
            _ => return Err(bad()),
        };
        out.push((sign, color));
        if end == rest.len() {
            return Ok(out);
        }
        sign = if rest.as_bytes()[end] == b'+' { 1 } else { -1 };
        rest = &rest[end + 1..];
    }
}

fn parse_terms(s: &str) -> Result<Vec<Term>> {
    let bad = |m: &str| Error::Parse(format!("boxed notation: {m}"));
    let mut terms = Vec::new();
    let mut rest = s.trim_start();
    while !rest.is_empty() {
        let mut sign = 1;
        if let Some(r) = rest.strip_prefix('+') {
            rest = r.trim_start();
        } else if let Some(r) = rest.strip_prefix('-') {
            sign = -1;
            rest = r.trim_start();
        } else if !terms.is_empty() {
            return Err(bad("missing sign between terms"));
        }
        let mut coeff = Q::one();
        if !rest.starts_with('[') {
            let end = rest.find(char::is_whitespace).ok_or_else(|| bad("coefficient without diagram"))?;
            coeff = rational::parse(&rest[..end])?;
            rest = rest[end..].trim_start();
        }
        let mut boxes = Vec::new();
        let mut edges = Vec::new();
        loop {
            let inner = rest.strip_prefix('[').ok_or_else(|| bad("expected '['"))?;
            let close = inner.find(']').ok_or_else(|| bad("unclosed box"))?;
            boxes.push(parse_box(&inner[..close])?);
            rest = &inner[close + 1..];
            match edge_symbol(rest) {
                Some((e, len)) if rest[len..].starts_with('[') => {
                    edges.push(e);
                    rest = &rest[len..];
                }
                _ => break,
            }
        }
        terms.push(Term {
            coeff: coeff * Q::from_integer(sign.into()),
            boxes,
            edges,
        });
        rest = rest.trim_start();
    }
    Ok(terms)
}

/// Converts a boxed-notation expression into a graph series for `params`.
pub fn parse_boxed(s: &str, params: &TorusParams) -> Result<GraphSeries> {
    let terms = parse_terms(s)?;
    let max_edges = terms
        .iter()
        .map(|t| t.edges.iter().map(|e| e.mult).sum::<usize>())
        .max()
        .unwrap_or(0);
    let mut out = GraphSeries::zero(Truncation::edges(max_edges.max(params.e_max())));
    for t in &terms {
        let n = t.boxes.len();
        let mut ends = vec![0usize; n];
        let mut mult = Vec::with_capacity(n.saturating_sub(1));
        for (i, e) in t.edges.iter().enumerate() {
            ends[i] += e.left;
            ends[i + 1] += e.right;
            mult.push(e.mult);
        }
        // multilinear expansion over the summands of every box
        let mut choice = vec![0usize; n];
        loop {
            let mut coeff = t.coeff.clone();
            let mut colors = Vec::with_capacity(n);
            for (v, &k) in choice.iter().enumerate() {
                let (sign, color) = t.boxes[v][k];
                coeff *= Q::from_integer(sign.into());
                coeff *= rational::pow(&params.scale_q(color), -(ends[v] as i64));
                colors.push(color);
            }
            out.add_term(ColoredMultigraph::path(&colors, &mult)?, coeff);
            let mut v = 0;
            while v < n {
                choice[v] += 1;
                if choice[v] < t.boxes[v].len() {
                    break;
                }
                choice[v] = 0;
                v += 1;
            }
            if v == n {
                break;
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    #[test]
    fn division_rule() {
        let params = TorusParams::new(2, 3, 2).unwrap();
        let s = parse_boxed("[p]=[q]", &params).unwrap();
        let g = ColoredMultigraph::path(&[Color::A, Color::B], &[2]).unwrap();
        assert_eq!(s.coeff(&g), frac(1, 36));
        let s = parse_boxed("- [p+q-pq]<<[pq]", &params).unwrap();
        let ac = ColoredMultigraph::path(&[Color::A, Color::C], &[2]).unwrap();
        let cc = ColoredMultigraph::path(&[Color::C, Color::C], &[2]).unwrap();
        assert_eq!(s.coeff(&ac), frac(-1, 36));
        assert_eq!(s.coeff(&cc), frac(1, 36));
    }

    #[test]
    fn signs_and_coefficients() {
        let params = TorusParams::new(2, 3, 2).unwrap();
        let s = parse_boxed("[p] - [q] + 3/4 [pq]", &params).unwrap();
        assert_eq!(s.coeff(&ColoredMultigraph::vertex(Color::B)), frac(-1, 1));
        assert_eq!(s.coeff(&ColoredMultigraph::vertex(Color::C)), frac(3, 4));
        assert!(parse_boxed("[p] [q]", &params).is_err());
        assert!(parse_boxed("[x]", &params).is_err());
        assert!(parse_boxed("[p", &params).is_err());
    }
}
