//! Bubble trees of `X_{p,q}` and their rational decorations.
//!
//! A vertex of scale `n` and valence `k >= 1` carries
//! `n · 1/4 · D^{k-1} h(t^n)`; under `t = e^x` this is the `k`-th derivative
//! of `f(n x)` up to the pole `(-1)^k (k-1)!/2 · x^-k`. A vertex of valence
//! 0 carries `f(n x)` itself.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Color, ColoredMultigraph, GraphSeries};
use crate::rational::{self, int, Q};
use crate::series::{apply_d, h_function, hair_expand, series_f, LaurentSeries, RationalFunction};

use super::params::{scale_label, TorusParams};
use super::recursion::x_pq_limit;

/// Normalization of a valence-`k` vertex of scale `n`: `n` for `k >= 1`,
/// 1 for `k = 0`.
pub fn vertex_normalization(n: i64, k: usize) -> Q {
    if k == 0 {
        Q::from_integer(1.into())
    } else {
        int(n)
    }
}

/// Terms of `x` whose graph is a tree without multi-edges.
pub fn extract_trees(x: &GraphSeries) -> Vec<(ColoredMultigraph, Q)> {
    x.iter()
        .filter(|(g, _)| g.is_tree() && !g.has_multi_edges())
        .map(|(g, c)| (g.clone(), c.clone()))
        .collect()
}

/// The function attached to a circle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Decoration {
    /// `f(n x)`.
    Wheel,
    /// `D^i h(t^n)`.
    DerivedH(usize),
}

impl fmt::Display for Decoration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Decoration::Wheel => write!(f, "f"),
            Decoration::DerivedH(i) => write!(f, "D{i}_h"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexDecoration {
    pub color: Color,
    pub scale: i64,
    pub valence: usize,
    pub normalization: Q,
}

impl VertexDecoration {
    pub fn new(color: Color, scale: i64, valence: usize) -> Self {
        VertexDecoration {
            color,
            scale,
            valence,
            normalization: vertex_normalization(scale, valence),
        }
    }

    pub fn decoration(&self) -> Decoration {
        match self.valence {
            0 => Decoration::Wheel,
            k => Decoration::DerivedH(k - 1),
        }
    }

    /// `normalization/4 · D^{k-1} h(t^n)`, or `None` for valence 0.
    pub fn rational_function(&self) -> Option<RationalFunction> {
        let k = self.valence.checked_sub(1)?;
        let g = apply_d(&h_function(self.scale), k);
        Some(g.scale(&(&self.normalization * rational::frac(1, 4))))
    }

    /// The decoration under `t = e^x`, up to `x^order`.
    pub fn hair_series(&self, order: i64) -> Result<LaurentSeries> {
        match self.rational_function() {
            None => Ok(series_f(self.scale, order)),
            Some(g) => hair_expand(&g, order),
        }
    }

    /// `(-1)^k (k-1)!/2 · x^-k`, zero for valence 0.
    pub fn polar_correction(&self, order: i64) -> LaurentSeries {
        let k = self.valence as i64;
        if k == 0 {
            return LaurentSeries::zero("x", order);
        }
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let c = Q::from_integer(rational::factorial(k as u64 - 1) * sign) * rational::frac(1, 2);
        LaurentSeries::monomial("x", c, -k, order)
    }

    /// Hair series plus polar correction: the leg series of the circle.
    /// A remaining pole means the normalization is wrong.
    pub fn leg_series(&self, order: i64) -> Result<LaurentSeries> {
        let s = self.hair_series(order)?.add(&self.polar_correction(order));
        if s.valuation() < 0 {
            return Err(Error::MisNormalized(s.valuation()));
        }
        Ok(s)
    }

    pub fn with_normalization(&self, normalization: Q) -> Self {
        VertexDecoration {
            normalization,
            ..self.clone()
        }
    }
}

/// A bubble tree with its coefficient and per-vertex decorations, indexed
/// like the vertices of `tree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecoratedTree {
    pub tree: ColoredMultigraph,
    pub coefficient: Q,
    pub vertices: Vec<VertexDecoration>,
}

impl DecoratedTree {
    pub fn new(tree: ColoredMultigraph, coefficient: Q, params: &TorusParams) -> Result<Self> {
        if !tree.is_tree() || tree.has_multi_edges() {
            return Err(Error::InvalidParameter(format!("{tree} is not a simple tree")));
        }
        let val = tree.valences();
        let vertices = tree
            .colors()
            .iter()
            .zip(val)
            .map(|(&c, k)| VertexDecoration::new(c, params.scale(c), k))
            .collect();
        Ok(DecoratedTree {
            tree,
            coefficient,
            vertices,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Product of the hair series of a single-vertex tree with its
    /// coefficient; `None` for larger trees.
    pub fn one_loop_series(&self, order: i64) -> Option<LaurentSeries> {
        match self.vertices.as_slice() {
            [v] => Some(series_f(v.scale, order).scalar_mul(&self.coefficient)),
            _ => None,
        }
    }
}

/// Decorates every tree of `x`.
pub fn decorate(x: &GraphSeries, params: &TorusParams) -> Result<Vec<DecoratedTree>> {
    extract_trees(x)
        .into_iter()
        .map(|(g, c)| DecoratedTree::new(g, c, params))
        .collect()
}

/// `Y^rat_{p,q}`: the decorated trees of `X_{p,q}`.
pub fn y_rat(params: &TorusParams) -> Result<Vec<DecoratedTree>> {
    decorate(&x_pq_limit(params)?, params)
}

/// Sum of the hair series of the single-vertex trees.
pub fn one_loop_part(trees: &[DecoratedTree], order: i64) -> LaurentSeries {
    trees
        .iter()
        .filter_map(|t| t.one_loop_series(order))
        .fold(LaurentSeries::zero("x", order), |acc, s| acc.add(&s))
}

#[derive(Serialize)]
struct VertexJson {
    color: Color,
    scale: &'static str,
    valence: usize,
    decoration: String,
    normalization: String,
}

#[derive(Serialize)]
struct TreeJson<'a> {
    tree: &'a ColoredMultigraph,
    coeff: String,
    vertices: Vec<VertexJson>,
}

impl Serialize for DecoratedTree {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TreeJson {
            tree: &self.tree,
            coeff: rational::to_text(&self.coefficient),
            vertices: self
                .vertices
                .iter()
                .map(|v| VertexJson {
                    color: v.color,
                    scale: scale_label(v.color),
                    valence: v.valence,
                    decoration: v.decoration().to_string(),
                    normalization: rational::to_text(&v.normalization),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl fmt::Display for VertexDecoration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.decoration() {
            Decoration::Wheel => write!(f, "f({}h)", self.scale),
            Decoration::DerivedH(i) => {
                let c = &self.normalization * rational::frac(1, 4);
                write!(f, "{}·D^{i}h(t^{})", rational::pretty(&c), self.scale)
            }
        }
    }
}

impl fmt::Display for DecoratedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", rational::pretty(&self.coefficient), self.tree)?;
        for (i, v) in self.vertices.iter().enumerate() {
            write!(f, "{} {i}: {v}", if i == 0 { " |" } else { "," })?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;
    use crate::series::wh_series;
    use num_traits::Zero;

    #[test]
    fn leading_trees() {
        let params = TorusParams::new(2, 3, 0).unwrap();
        let trees = y_rat(&params).unwrap();
        assert_eq!(trees.len(), 3);
        let mut tags: Vec<(i64, String, Q)> = trees
            .iter()
            .map(|t| (t.vertices[0].scale, t.vertices[0].decoration().to_string(), t.coefficient.clone()))
            .collect();
        tags.sort();
        assert_eq!(
            tags,
            vec![(2, "f".into(), int(1)), (3, "f".into(), int(1)), (6, "f".into(), int(-1))]
        );
    }

    #[test]
    fn multi_edges_dropped() {
        let params = TorusParams::new(2, 3, 2).unwrap();
        let x = x_pq_limit(&params).unwrap();
        let trees = extract_trees(&x);
        assert!(trees.iter().all(|(g, _)| !g.has_multi_edges()));
        let ab2 = ColoredMultigraph::path(&[Color::A, Color::B], &[2]).unwrap();
        assert!(!x.coeff(&ab2).is_zero());
        // one-edge trees: a-b, a-c, b-c, c-c
        assert_eq!(trees.iter().filter(|(g, _)| g.edge_count() == 1).count(), 4);
    }

    #[test]
    fn one_edge_decoration() {
        let params = TorusParams::new(2, 3, 1).unwrap();
        let ab = ColoredMultigraph::path(&[Color::A, Color::B], &[1]).unwrap();
        let t = DecoratedTree::new(ab, frac(1, 6), &params).unwrap();
        let a = t.vertices.iter().find(|v| v.color == Color::A).unwrap();
        assert_eq!(a.decoration(), Decoration::DerivedH(0));
        assert_eq!(a.rational_function().unwrap(), h_function(2).scale(&frac(1, 2)));
    }

    #[test]
    fn leg_series_is_derivative_of_f() {
        for n in [2, 3, -6] {
            for k in 1..=3usize {
                let v = VertexDecoration::new(Color::A, n, k);
                let legs = v.leg_series(8).unwrap();
                let direct = series_f(n, 8 + k as i64).derivative_n(k).truncate(8);
                assert_eq!(legs, direct, "n = {n}, k = {k}");
            }
        }
        let bad = VertexDecoration::new(Color::A, 2, 2).with_normalization(int(1));
        assert!(matches!(bad.leg_series(4), Err(Error::MisNormalized(_))));
    }

    #[test]
    fn one_loop_identity() {
        for (p, q) in [(2, 3), (2, 5), (3, 4)] {
            let params = TorusParams::new(p, q, 0).unwrap();
            let lhs = one_loop_part(&y_rat(&params).unwrap(), 12);
            let rhs = series_f(1, 12).add(&wh_series(p, q, 12).unwrap());
            assert_eq!(lhs, rhs);
        }
    }
}
