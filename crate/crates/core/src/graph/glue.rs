//! The gluing operations on graph series: the edge-adding product of two
//! group-like series, its logarithm, the `a^r` rescaling and recoloring.
//!
//! Coefficients live on isomorphism classes. The product of a class `G` of
//! `u` with a class `H` of `v` is evaluated on one fixed labeled
//! representative of each: every multiset of new edges from an `A`-colored
//! vertex of `G` to a `B`-colored vertex of `H` is counted once. With
//! `u = exp(•a)`, `v = exp(•b)` this gives `a=b` coefficient 1 and the path
//! `a-b-a` coefficient 1/2 (two labeled `a` vertices, weight 1/2!).

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{self, Q};

use super::multigraph::{Color, ColoredMultigraph, UnionFind};
use super::series::{graph_exp, GraphSeries, Truncation};

fn check_disjoint(a: &[Color], b: &[Color]) -> Result<()> {
    if a.iter().any(|c| b.contains(c)) {
        let show = |s: &[Color]| s.iter().map(|c| c.0).collect::<String>();
        return Err(Error::OverlappingColors(show(a), show(b)));
    }
    Ok(())
}

/// Calls `f` with every multiset of size `m` drawn from `0..n`, as a
/// nondecreasing index list.
fn for_each_multiset(n: usize, m: usize, f: &mut impl FnMut(&[usize])) {
    fn rec(n: usize, m: usize, start: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if cur.len() == m {
            f(cur);
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(n, m, i, cur, f);
            cur.pop();
        }
    }
    if m > 0 && n == 0 {
        return;
    }
    rec(n, m, 0, &mut Vec::with_capacity(m), f);
}

struct Pairing<'a> {
    g: &'a ColoredMultigraph,
    h: &'a ColoredMultigraph,
    /// (vertex of G, vertex of H shifted by |G|)
    pairs: Vec<(usize, usize)>,
}

impl<'a> Pairing<'a> {
    fn new(g: &'a ColoredMultigraph, h: &'a ColoredMultigraph, a: &[Color], b: &[Color]) -> Self {
        let off = g.vertex_count();
        let alpha: Vec<usize> = (0..g.vertex_count()).filter(|&i| a.contains(&g.colors()[i])).collect();
        let beta: Vec<usize> = (0..h.vertex_count()).filter(|&j| b.contains(&h.colors()[j])).collect();
        let pairs = alpha
            .iter()
            .flat_map(|&i| beta.iter().map(move |&j| (i, j + off)))
            .collect();
        Pairing { g, h, pairs }
    }

    fn base(&self) -> (Vec<Color>, Vec<(usize, usize)>) {
        let off = self.g.vertex_count();
        let mut colors = self.g.colors().to_vec();
        colors.extend_from_slice(self.h.colors());
        let mut edges = self.g.edges().to_vec();
        edges.extend(self.h.edges().iter().map(|&(i, j)| (i + off, j + off)));
        (colors, edges)
    }
}

/// `u · v`: all ways of adding finitely many edges from `A`-colored vertices
/// of `u`-terms to `B`-colored vertices of `v`-terms.
pub fn glue_product(u: &GraphSeries, v: &GraphSeries, a: &[Color], b: &[Color]) -> Result<GraphSeries> {
    check_disjoint(a, b)?;
    let unit = ColoredMultigraph::empty();
    if !u.coeff(&unit).is_one() || !v.coeff(&unit).is_one() {
        return Err(Error::MissingUnit);
    }
    let t = u.truncation().min(v.truncation());
    let mut out = GraphSeries::zero(t);
    for (g, c) in u.iter() {
        for (h, d) in v.iter() {
            if g.vertex_count() + h.vertex_count() > t.max_vertices {
                continue;
            }
            let Some(budget) = t.max_edges.checked_sub(g.edge_count() + h.edge_count()) else {
                continue;
            };
            let pairing = Pairing::new(g, h, a, b);
            let (colors, base) = pairing.base();
            let cd = c * d;
            for m in 0..=budget {
                for_each_multiset(pairing.pairs.len(), m, &mut |ms| {
                    let mut edges = base.clone();
                    edges.extend(ms.iter().map(|&k| pairing.pairs[k]));
                    let glued = ColoredMultigraph::new(colors.clone(), edges).expect("no loops across factors");
                    out.add_term(glued, cd.clone());
                });
            }
        }
    }
    Ok(out)
}

/// `exp(x)` keeping only terms with `components + edges <= max_weight`.
fn exp_weighted(x: &GraphSeries, max_weight: usize) -> Result<Vec<(ColoredMultigraph, Q, usize)>> {
    let weight = |g: &ColoredMultigraph| g.components() + g.edge_count();
    let light = x.filter(|g| weight(g) <= max_weight);
    let e = graph_exp(&light)?;
    Ok(e.iter()
        .filter(|(g, _)| weight(g) <= max_weight)
        .map(|(g, c)| (g.clone(), c.clone(), g.components()))
        .collect())
}

/// `log(exp(x) · exp(y))` for connected series `x`, `y`.
///
/// For any series `u` with unit term, the connected part of `log u` equals
/// the connected part of `u` (higher powers of `u - 1` are disjoint unions),
/// so only connected glued graphs are generated. A connected result built
/// from `r` components on the left and `s` on the right needs at least
/// `r + s - 1` new edges, which bounds the exponential terms that can
/// contribute.
pub fn glue_log(x: &GraphSeries, y: &GraphSeries, a: &[Color], b: &[Color]) -> Result<GraphSeries> {
    check_disjoint(a, b)?;
    if !x.is_connected_series() || !y.is_connected_series() {
        return Err(Error::Disconnected);
    }
    let t = x.truncation().min(y.truncation());
    let w = t.max_edges + 1;
    let ex = exp_weighted(&x.truncated(t), w)?;
    let ey = exp_weighted(&y.truncated(t), w)?;
    let mut out = GraphSeries::zero(t);
    for (g, c, r) in &ex {
        for (h, d, s) in &ey {
            let (g_edges, h_edges) = (g.edge_count(), h.edge_count());
            if r + g_edges + s + h_edges > w || g.vertex_count() + h.vertex_count() > t.max_vertices {
                continue;
            }
            if g.is_empty() || h.is_empty() {
                // Nothing to attach to: only a single connected factor survives.
                if r + s == 1 {
                    out.add_term(if g.is_empty() { h.clone() } else { g.clone() }, c * d);
                }
                continue;
            }
            let pairing = Pairing::new(g, h, a, b);
            if pairing.pairs.is_empty() {
                continue;
            }
            let (colors, base) = pairing.base();
            let n = colors.len();
            let cd = c * d;
            let lo = r + s - 1;
            let hi = t.max_edges - g_edges - h_edges;
            for m in lo..=hi {
                for_each_multiset(pairing.pairs.len(), m, &mut |ms| {
                    let mut uf = UnionFind::new(n);
                    for &(i, j) in &base {
                        uf.union(i, j);
                    }
                    for &k in ms {
                        let (i, j) = pairing.pairs[k];
                        uf.union(i, j);
                    }
                    if uf.count() != 1 {
                        return;
                    }
                    let mut edges = base.clone();
                    edges.extend(ms.iter().map(|&k| pairing.pairs[k]));
                    let glued = ColoredMultigraph::new(colors.clone(), edges).expect("no loops across factors");
                    out.add_term(glued, cd.clone());
                });
            }
        }
    }
    Ok(out)
}

/// The operator `a^r`: divides each graph by `r^N`, `N` the total valence of
/// its `color`-colored vertices.
pub fn rescale(x: &GraphSeries, color: Color, r: &Q) -> Result<GraphSeries> {
    if r.is_zero() {
        return Err(Error::InvalidParameter("rescale factor must be nonzero".into()));
    }
    Ok(GraphSeries::from_terms(
        x.iter().map(|(g, c)| {
            let val = g.valences();
            let n: usize = (0..g.vertex_count()).filter(|&i| g.colors()[i] == color).map(|i| val[i]).sum();
            (g.clone(), c * rational::pow(r, -(n as i64)))
        }),
        x.truncation(),
    ))
}

/// Recolors vertices; colors absent from `mapping` are kept.
pub fn relabel(x: &GraphSeries, mapping: &[(Color, Color)]) -> GraphSeries {
    let map = |c: Color| mapping.iter().find(|(from, _)| *from == c).map_or(c, |&(_, to)| to);
    GraphSeries::from_terms(x.iter().map(|(g, c)| (g.recolor(map), c.clone())), x.truncation())
}

/// Convenience for tests and callers: the series of one vertex.
pub fn vertex_series(c: Color, t: Truncation) -> GraphSeries {
    GraphSeries::single(ColoredMultigraph::vertex(c), Q::from_integer(1.into()), t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::series::graph_log;
    use crate::rational::{frac, int};

    const A: Color = Color::A;
    const B: Color = Color::B;
    const C: Color = Color::C;

    fn path(c: &[Color], m: &[usize]) -> ColoredMultigraph {
        ColoredMultigraph::path(c, m).unwrap()
    }

    fn exp_ab(t: Truncation) -> (GraphSeries, GraphSeries) {
        (
            graph_exp(&vertex_series(A, t)).unwrap(),
            graph_exp(&vertex_series(B, t)).unwrap(),
        )
    }

    #[test]
    fn multisets() {
        let mut n = 0;
        for_each_multiset(3, 2, &mut |_| n += 1);
        assert_eq!(n, 6);
        let mut n = 0;
        for_each_multiset(0, 0, &mut |_| n += 1);
        assert_eq!(n, 1);
    }

    #[test]
    fn product_example_coefficients() {
        let t = Truncation::edges(3);
        let (u, v) = exp_ab(t);
        let p = glue_product(&u, &v, &[A], &[B]).unwrap();
        let l = graph_log(&p).unwrap();
        assert_eq!(l.coeff(&ColoredMultigraph::vertex(A)), int(1));
        assert_eq!(l.coeff(&path(&[A, B], &[1])), int(1));
        assert_eq!(l.coeff(&path(&[A, B], &[2])), int(1));
        assert_eq!(l.coeff(&path(&[A, B], &[3])), int(1));
        assert_eq!(l.coeff(&path(&[A, B, A], &[1, 1])), frac(1, 2));
        assert_eq!(l.coeff(&path(&[B, A, B], &[1, 1])), frac(1, 2));
        assert!(l.is_connected_series());
    }

    #[test]
    fn product_with_unit() {
        let t = Truncation::edges(2);
        let (u, _) = exp_ab(t);
        assert_eq!(glue_product(&u, &GraphSeries::one(t), &[A], &[B]).unwrap(), u);
    }

    #[test]
    fn glue_log_matches_log_of_product() {
        let t = Truncation::edges(3);
        let x = GraphSeries::from_terms([(ColoredMultigraph::vertex(A), int(1)), (path(&[A, C], &[1]), frac(-1, 2))], t);
        let y = GraphSeries::from_terms([(ColoredMultigraph::vertex(B), int(1)), (path(&[B, B], &[1]), frac(1, 3))], t);
        let fast = glue_log(&x, &y, &[A, C], &[B]).unwrap();
        let slow = graph_log(&glue_product(&graph_exp(&x).unwrap(), &graph_exp(&y).unwrap(), &[A, C], &[B]).unwrap()).unwrap();
        assert_eq!(fast, slow);
        assert_eq!(glue_log(&x, &GraphSeries::zero(t), &[A], &[B]).unwrap(), x);
    }

    #[test]
    fn overlapping_colors_rejected() {
        let t = Truncation::edges(1);
        let (u, v) = exp_ab(t);
        assert!(matches!(glue_product(&u, &v, &[A], &[A, B]), Err(Error::OverlappingColors(..))));
    }

    #[test]
    fn rescale_by_valence() {
        let t = Truncation::edges(2);
        let x = GraphSeries::from_terms(
            [
                (ColoredMultigraph::vertex(A), int(1)),
                (path(&[A, B], &[1]), int(1)),
                (path(&[A, B], &[2]), int(1)),
            ],
            t,
        );
        let y = rescale(&x, A, &int(3)).unwrap();
        assert_eq!(y.coeff(&ColoredMultigraph::vertex(A)), int(1));
        assert_eq!(y.coeff(&path(&[A, B], &[1])), frac(1, 3));
        assert_eq!(y.coeff(&path(&[A, B], &[2])), frac(1, 9));
        assert!(rescale(&x, A, &int(0)).is_err());
    }

    #[test]
    fn relabel_merges_classes() {
        let t = Truncation::edges(2);
        let x = GraphSeries::from_terms(
            [(path(&[A, B, A], &[1, 1]), frac(1, 2)), (path(&[B, A, B], &[1, 1]), frac(1, 2))],
            t,
        );
        let y = relabel(&x, &[(A, C), (B, C)]);
        assert_eq!(y.len(), 1);
        assert_eq!(y.coeff(&path(&[C, C, C], &[1, 1])), int(1));
        let star = relabel(&vertex_series(Color::ACTIVE, t), &[(Color::ACTIVE, C)]);
        assert_eq!(star, vertex_series(C, t));
    }
}
