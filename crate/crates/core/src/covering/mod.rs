//! The branched-covering operators on bubble trees.
//!
//! `lift_r` keeps the terms `t^k` with `r | k` of a decoration expanded at
//! `t = 0` and maps them to `t^{k/r}`; one factor `r` is applied per tree.
//! `Π_r` multiplies a tree by `r^{V-1}`. On `D^i h(t^n)` with
//! `gcd(n, r) = 1` the lift is multiplication by `r^i`, so the two agree on
//! trees without valence-0 circles.

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::ColoredMultigraph;
use crate::rational::{self, gcd_i64, int, Q};
use crate::series::{LaurentSeries, RationalFunction};
use crate::torus::{DecoratedTree, TorusParams};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LiftContext {
    r: i64,
    series_depth: i64,
}

impl LiftContext {
    /// `series_depth` is the depth of the `t`-expansion before lifting; lifted
    /// series are valid to `series_depth / r`.
    pub fn new(r: i64, series_depth: i64) -> Result<Self> {
        if r < 2 {
            return Err(Error::InvalidParameter(format!("r must be at least 2 (got {r})")));
        }
        if series_depth < 0 {
            return Err(Error::InvalidParameter("series depth must be nonnegative".into()));
        }
        Ok(LiftContext { r, series_depth })
    }

    /// Context whose lifted series reach `depth`.
    pub fn with_lifted_depth(r: i64, depth: i64) -> Result<Self> {
        LiftContext::new(r, depth.checked_mul(r).ok_or_else(|| Error::InvalidParameter("depth overflow".into()))?)
    }

    pub fn r(&self) -> i64 {
        self.r
    }

    pub fn series_depth(&self) -> i64 {
        self.series_depth
    }

    pub fn lifted_depth(&self) -> i64 {
        self.series_depth.div_euclid(self.r)
    }

    /// Requires `gcd(r, pq) = 1`.
    pub fn check(&self, params: &TorusParams) -> Result<()> {
        if gcd_i64(self.r, params.p() * params.q()) != 1 {
            return Err(Error::InvalidParameter(format!(
                "r = {} must be coprime to p = {} and q = {}",
                self.r,
                params.p(),
                params.q()
            )));
        }
        Ok(())
    }
}

/// Taylor expansion of `g(t)` at `t = 0` up to `t^depth`.
pub fn t_expansion(g: &RationalFunction, depth: i64) -> Result<LaurentSeries> {
    let den = g.denominator();
    if den.coeff(0).is_zero() {
        return Err(Error::PoleAtZero);
    }
    let n = LaurentSeries::from_poly("t", &g.numerator(), depth);
    let d = LaurentSeries::from_poly("t", &den, depth);
    n.div(&d)
}

/// `Σ c_k t^k -> Σ_{r | k} c_k t^{k/r}`.
pub fn lift_series(s: &LaurentSeries, r: i64) -> LaurentSeries {
    let order = s.order().div_euclid(r);
    let terms: Vec<(i64, Q)> = s
        .terms()
        .filter(|(e, _)| e.rem_euclid(r) == 0)
        .map(|(e, c)| (e / r, c.clone()))
        .collect();
    LaurentSeries::from_terms(s.var(), &terms, order)
}

/// `lift_r` of a decoration as a series, without the per-tree factor `r`.
pub fn lift_r_series(g: &RationalFunction, ctx: &LiftContext) -> Result<LaurentSeries> {
    Ok(lift_series(&t_expansion(g, ctx.series_depth)?, ctx.r))
}

/// `Π_r`: the coefficient times `r^{V-1}`.
pub fn pi_r(t: &DecoratedTree, ctx: &LiftContext) -> DecoratedTree {
    let mut out = t.clone();
    out.coefficient *= rational::pow(&int(ctx.r), euler_exponent(t));
    out
}

/// `-χ` of the bubble diagram: `V - 1`.
pub fn euler_exponent(t: &DecoratedTree) -> i64 {
    t.vertex_count() as i64 - 1
}

/// A tree with lifted decorations, given as series in `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftedTree {
    pub tree: ColoredMultigraph,
    pub coefficient: Q,
    pub decorations: Vec<LaurentSeries>,
}

/// Lifts every decoration and multiplies the coefficient by `r`.
pub fn lift_r_tree(t: &DecoratedTree, ctx: &LiftContext) -> Result<LiftedTree> {
    let decorations = t
        .vertices
        .iter()
        .map(|v| {
            if gcd_i64(v.scale, ctx.r) != 1 {
                return Err(Error::InvalidParameter(format!(
                    "scale {} is not coprime to r = {}",
                    v.scale, ctx.r
                )));
            }
            let g = v.rational_function().ok_or_else(|| {
                Error::InvalidParameter("lift is not defined on valence-0 circles".into())
            })?;
            lift_r_series(&g, ctx)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(LiftedTree {
        tree: t.tree.clone(),
        coefficient: &t.coefficient * int(ctx.r),
        decorations,
    })
}

/// Decorations of a tree expanded at `t = 0`, unlifted.
pub fn tree_expansions(t: &DecoratedTree, depth: i64) -> Result<Vec<LaurentSeries>> {
    t.vertices
        .iter()
        .map(|v| {
            let g = v.rational_function().ok_or_else(|| {
                Error::InvalidParameter("valence-0 circles have no rational decoration".into())
            })?;
            t_expansion(&g, depth)
        })
        .collect()
}

/// `c` with `a = c · b` up to the common order, if it exists.
pub fn series_ratio(a: &LaurentSeries, b: &LaurentSeries) -> Option<Q> {
    let order = a.order().min(b.order());
    let lead = (b.valuation()..=order).find(|&e| !b.coeff(e).is_zero());
    let c = match lead {
        Some(e) => a.coeff(e) / b.coeff(e),
        None => return a.truncate(order).is_zero().then(Q::zero),
    };
    a.agrees_with(&b.scalar_mul(&c), order).then_some(c)
}

/// Outcome of comparing `lift_r` and `Π_r` on one tree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LiftComparison {
    pub tree: ColoredMultigraph,
    pub r: i64,
    pub euler_exponent: i64,
    pub series_match_depth: i64,
    /// Per-circle ratio of lifted to original decoration.
    #[serde(serialize_with = "ser_qs")]
    pub ratios: Vec<Q>,
    pub verdict: bool,
}

fn ser_qs<S: serde::Serializer>(x: &[Q], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(x.iter().map(rational::to_text))
}

/// Checks `lift_r(t) = Π_r(t)`: each lifted decoration must be an exact
/// multiple of the original one to the lifted depth, and the coefficients
/// must agree once these multiples are absorbed.
pub fn compare_lift(t: &DecoratedTree, ctx: &LiftContext) -> Result<LiftComparison> {
    let lifted = lift_r_tree(t, ctx)?;
    let pi = pi_r(t, ctx);
    let depth = ctx.lifted_depth();
    let original = tree_expansions(&pi, depth)?;
    let ratios: Option<Vec<Q>> = lifted
        .decorations
        .iter()
        .zip(&original)
        .map(|(l, o)| series_ratio(l, o))
        .collect();
    let (ratios, verdict) = match ratios {
        Some(rs) => {
            let total = rs.iter().fold(lifted.coefficient.clone(), |acc, x| acc * x);
            let ok = total == pi.coefficient;
            (rs, ok)
        }
        None => (vec![], false),
    };
    Ok(LiftComparison {
        tree: t.tree.clone(),
        r: ctx.r,
        euler_exponent: euler_exponent(t),
        series_match_depth: depth,
        ratios,
        verdict,
    })
}

/// `lift_r D^i h(t^n) = r^i D^i h(t^n)` as series to the lifted depth.
pub fn lift_identity_holds(n: i64, i: usize, ctx: &LiftContext) -> Result<bool> {
    let g = crate::series::apply_d(&crate::series::h_function(n), i);
    let lifted = lift_r_series(&g, ctx)?;
    let expected = t_expansion(&g, ctx.lifted_depth())?.scalar_mul(&rational::pow(&int(ctx.r), i as i64));
    Ok(lifted.agrees_with(&expected, ctx.lifted_depth()) && lifted.order() == expected.order())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Color;
    use crate::series::h_function;
    use crate::torus::y_rat;

    #[test]
    fn exponent_filter() {
        let t2 = RationalFunction::from_ints(&[0, 0, 1], &[1]).unwrap();
        let t3 = RationalFunction::from_ints(&[0, 0, 0, 1], &[1]).unwrap();
        let ctx = LiftContext::new(2, 6).unwrap();
        let l = lift_r_series(&t2, &ctx).unwrap();
        assert_eq!(l.coeff(1), int(1));
        assert_eq!(l.terms().count(), 1);
        assert!(lift_r_series(&t3, &ctx).unwrap().is_zero());
    }

    #[test]
    fn pole_at_zero_rejected() {
        let inv = RationalFunction::from_ints(&[1], &[0, 1]).unwrap();
        let ctx = LiftContext::new(2, 6).unwrap();
        assert_eq!(lift_r_series(&inv, &ctx), Err(Error::PoleAtZero));
    }

    #[test]
    fn h_is_fixed() {
        let ctx = LiftContext::with_lifted_depth(5, 30).unwrap();
        for n in [1, 2, 3, 6] {
            let l = lift_r_series(&h_function(n), &ctx).unwrap();
            assert!(l.agrees_with(&t_expansion(&h_function(n), 30).unwrap(), 30));
            for i in 0..=3 {
                assert!(lift_identity_holds(n, i, &ctx).unwrap());
            }
        }
    }

    #[test]
    fn pi_r_powers() {
        let params = TorusParams::new(2, 3, 2).unwrap();
        let ctx = LiftContext::new(5, 50).unwrap();
        for t in y_rat(&params).unwrap() {
            let p = pi_r(&t, &ctx);
            assert_eq!(p.coefficient, &t.coefficient * rational::pow(&int(5), t.vertex_count() as i64 - 1));
        }
    }

    #[test]
    fn lift_matches_pi() {
        let params = TorusParams::new(2, 3, 2).unwrap();
        let ctx = LiftContext::with_lifted_depth(7, 20).unwrap();
        for t in y_rat(&params).unwrap().iter().filter(|t| t.vertex_count() > 1) {
            let c = compare_lift(t, &ctx).unwrap();
            assert!(c.verdict, "{}", t.tree);
        }
    }

    #[test]
    fn domain_errors() {
        let params = TorusParams::new(2, 3, 1).unwrap();
        let ctx = LiftContext::new(2, 10).unwrap();
        let ab = ColoredMultigraph::path(&[Color::A, Color::B], &[1]).unwrap();
        let t = DecoratedTree::new(ab, int(1), &params).unwrap();
        assert!(lift_r_tree(&t, &ctx).is_err());
        let v = DecoratedTree::new(ColoredMultigraph::vertex(Color::A), int(1), &params).unwrap();
        assert!(lift_r_tree(&v, &LiftContext::new(5, 10).unwrap()).is_err());
        assert!(ctx.check(&params).is_err());
        assert!(LiftContext::new(1, 10).is_err());
    }
}
