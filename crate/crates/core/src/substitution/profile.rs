//! Leg profiles: coefficients indexed by the number of free legs on each
//! circle. This is the common ground of three computations: explicit
//! gluing of edges to wheel legs, the reduced substitution terms, and the
//! hair expansion of decorated trees.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Color, ColoredMultigraph};
use crate::rational::{self, int, Q};
use crate::series::{series_f, LaurentSeries};
use crate::torus::{DecoratedTree, TorusParams, VertexDecoration};

use super::terms::{substitute, VertexFactor};

/// Largest graph accepted by [`brute_force_glue`].
pub const BRUTE_FORCE_MAX_EDGES: usize = 3;
/// Largest total degree accepted by [`brute_force_glue`].
pub const BRUTE_FORCE_MAX_DEGREE: usize = 12;

/// Series attached to each vertex color.
pub type VertexSeries = BTreeMap<Color, LaurentSeries>;

/// `f(n x)` for every color of `params`, valid to `x^order`.
pub fn wheel_series(params: &TorusParams, order: i64) -> VertexSeries {
    [Color::ACTIVE, Color::A, Color::B, Color::C]
        .into_iter()
        .map(|c| (c, series_f(params.scale(c), order)))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LegProfile {
    pub counts: BTreeMap<Vec<usize>, Q>,
    pub total_degree: usize,
}

impl LegProfile {
    pub fn zero(total_degree: usize) -> Self {
        LegProfile {
            counts: BTreeMap::new(),
            total_degree,
        }
    }

    pub fn get(&self, legs: &[usize]) -> Q {
        self.counts.get(legs).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn add_term(&mut self, legs: Vec<usize>, c: Q) {
        if c.is_zero() || legs.iter().sum::<usize>() > self.total_degree {
            return;
        }
        let e = self.counts.entry(legs).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.counts.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = LegProfile::zero(self.total_degree.min(o.total_degree));
        for (k, v) in self.counts.iter().chain(&o.counts) {
            out.add_term(k.clone(), v.clone());
        }
        out
    }

    pub fn scale(&self, c: &Q) -> Self {
        let mut out = LegProfile::zero(self.total_degree);
        for (k, v) in &self.counts {
            out.add_term(k.clone(), v * c);
        }
        out
    }

    /// Profile of independent circles with the given per-circle series.
    pub fn tensor(per_circle: &[Vec<Q>], total_degree: usize) -> Self {
        let mut out = LegProfile::zero(total_degree);
        let mut acc: Vec<(Vec<usize>, Q)> = vec![(vec![], Q::from_integer(1.into()))];
        for s in per_circle {
            let mut next = Vec::new();
            for (legs, c) in &acc {
                let used: usize = legs.iter().sum();
                for (m, a) in s.iter().enumerate().take(total_degree + 1 - used) {
                    if !a.is_zero() {
                        let mut l = legs.clone();
                        l.push(m);
                        next.push((l, c * a));
                    }
                }
            }
            acc = next;
        }
        for (legs, c) in acc {
            out.add_term(legs, c);
        }
        out
    }
}

impl Serialize for LegProfile {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry<'a> {
            legs: &'a [usize],
            coeff: String,
        }
        #[derive(Serialize)]
        struct Json<'a> {
            total_degree: usize,
            counts: Vec<Entry<'a>>,
        }
        Json {
            total_degree: self.total_degree,
            counts: self
                .counts
                .iter()
                .map(|(k, v)| Entry {
                    legs: k,
                    coeff: rational::to_text(v),
                })
                .collect(),
        }
        .serialize(s)
    }
}

/// Number of ways to attach `k` distinct edge ends to distinct legs of a
/// wheel with `n` legs, by listing the words.
fn count_attachments(n: usize, k: usize) -> u64 {
    fn rec(n: usize, left: usize, used: &mut Vec<bool>) -> u64 {
        if left == 0 {
            return 1;
        }
        let mut total = 0;
        for pos in 0..n {
            if !used[pos] {
                used[pos] = true;
                total += rec(n, left - 1, used);
                used[pos] = false;
            }
        }
        total
    }
    rec(n, k, &mut vec![false; n])
}

fn series_for(series: &VertexSeries, c: Color, need: i64) -> Result<&LaurentSeries> {
    let s = series
        .get(&c)
        .ok_or_else(|| Error::InvalidParameter(format!("no vertex series for color {c}")))?;
    if s.order() < need {
        return Err(Error::InvalidParameter(format!(
            "vertex series for {c} is valid to order {} but {need} is needed",
            s.order()
        )));
    }
    Ok(s)
}

/// Free-leg series of one circle of valence `k` by explicit attachment.
pub fn brute_force_vertex(k: usize, s: &LaurentSeries, total_degree: usize) -> Vec<Q> {
    (k..=k + total_degree)
        .map(|n| {
            let a = s.coeff(n as i64);
            if a.is_zero() {
                a
            } else {
                a * Q::from_integer(count_attachments(n, k).into())
            }
        })
        .collect()
}

/// Glues the edges of `g` to wheel legs in every possible way and records
/// the free legs left on each circle.
pub fn brute_force_glue(g: &ColoredMultigraph, series: &VertexSeries, total_degree: usize) -> Result<LegProfile> {
    if g.edge_count() > BRUTE_FORCE_MAX_EDGES || total_degree > BRUTE_FORCE_MAX_DEGREE {
        return Err(Error::SizeBound(format!(
            "brute force is limited to {BRUTE_FORCE_MAX_EDGES} edges and degree {BRUTE_FORCE_MAX_DEGREE}"
        )));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let val = g.valences();
    let per_circle = g
        .colors()
        .iter()
        .zip(&val)
        .map(|(&c, &k)| Ok(brute_force_vertex(k, series_for(series, c, (k + total_degree) as i64)?, total_degree)))
        .collect::<Result<Vec<_>>>()?;
    Ok(LegProfile::tensor(&per_circle, total_degree))
}

/// Projects the reduced substitution of a tree onto leg counts. Only terms
/// without denominators can be projected.
pub fn symbolic_leg_profile(g: &ColoredMultigraph, series: &VertexSeries, total_degree: usize) -> Result<LegProfile> {
    let s = substitute(g)?;
    let val = g.valences();
    let mut out = LegProfile::zero(total_degree);
    for t in &s.terms {
        if t.bprime_degree != 0 {
            return Err(Error::InvalidParameter(format!(
                "leg profiles need terms without denominators ({g} is not a tree)"
            )));
        }
        let per_circle = t
            .factors
            .iter()
            .zip(g.colors().iter().zip(&val))
            .map(|(f, (&c, &k))| {
                let s = series_for(series, c, (k + total_degree) as i64)?;
                Ok(match f {
                    VertexFactor::Wheel { .. } => (0..=total_degree).map(|n| s.coeff(n as i64)).collect(),
                    VertexFactor::Reduced(fr) => (k..=k + total_degree)
                        .map(|n| s.coeff(n as i64) * fr.weight(n))
                        .collect(),
                })
            })
            .collect::<Result<Vec<Vec<Q>>>>()?;
        out = out.add(&LegProfile::tensor(&per_circle, total_degree));
    }
    Ok(out)
}

fn leg_coefficients(v: &VertexDecoration, total_degree: usize) -> Result<Vec<Q>> {
    let s = v.leg_series(total_degree as i64)?;
    Ok((0..=total_degree as i64).map(|e| s.coeff(e)).collect())
}

/// Hair expansion of a decorated tree, with polar corrections, as a leg
/// profile including the tree coefficient.
pub fn leg_profile_of_tree(t: &DecoratedTree, total_degree: usize) -> Result<LegProfile> {
    let per_circle = t
        .vertices
        .iter()
        .map(|v| leg_coefficients(v, total_degree))
        .collect::<Result<Vec<_>>>()?;
    Ok(LegProfile::tensor(&per_circle, total_degree).scale(&t.coefficient))
}

/// Fits the normalization `λ` of a valence-`k` circle of scale `n` so that
/// `λ/4 · D^{k-1} h(t^n)`, hair expanded and pole corrected, reproduces the
/// explicit gluing of `k` edges to the wheels of `f(n x)`.
pub fn fit_normalization(n: i64, k: usize, total_degree: usize) -> Result<Q> {
    if k == 0 {
        return Err(Error::InvalidParameter("valence-0 circles carry no normalization".into()));
    }
    let brute = brute_force_vertex(k, &series_f(n, (k + total_degree) as i64), total_degree);
    let bare = VertexDecoration::new(Color::A, n, k).with_normalization(int(1));
    let hair = bare.hair_series(total_degree as i64)?;
    let e = (0..=total_degree)
        .find(|&e| !hair.coeff(e as i64).is_zero())
        .ok_or_else(|| Error::InvalidParameter("decoration has no regular part in range".into()))?;
    let lambda = &brute[e] / hair.coeff(e as i64);
    let fitted = bare.with_normalization(lambda.clone());
    let legs = leg_coefficients(&fitted, total_degree)?;
    if legs != brute {
        return Err(Error::MisNormalized(0));
    }
    Ok(lambda)
}
