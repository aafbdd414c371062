//! Finite rational combinations of canonical gluing graphs, truncated by
//! edge and vertex count.
//!
//! The algebra is the free commutative algebra on connected graphs with
//! disjoint union as product and the empty graph as unit. Both truncation
//! bounds are additive under disjoint union, so dropping everything above
//! them is compatible with products, `exp` and `log`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, Q};

use super::multigraph::{Color, ColoredMultigraph};

/// Terms with more edges or more vertices than allowed are dropped.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Truncation {
    pub max_edges: usize,
    pub max_vertices: usize,
}

impl Truncation {
    /// Edge bound `e_max` with vertex bound `e_max + 1`, the largest vertex
    /// count of a connected graph with `e_max` edges.
    pub fn edges(e_max: usize) -> Self {
        Truncation {
            max_edges: e_max,
            max_vertices: e_max + 1,
        }
    }

    pub fn admits(&self, g: &ColoredMultigraph) -> bool {
        g.edge_count() <= self.max_edges && g.vertex_count() <= self.max_vertices
    }

    pub fn min(self, o: Truncation) -> Truncation {
        Truncation {
            max_edges: self.max_edges.min(o.max_edges),
            max_vertices: self.max_vertices.min(o.max_vertices),
        }
    }
}

#[derive(Clone, Debug)]
pub struct GraphSeries {
    terms: BTreeMap<ColoredMultigraph, Q>,
    truncation: Truncation,
    dropped: usize,
}

impl PartialEq for GraphSeries {
    /// Equality of coefficients; truncation metadata is ignored.
    fn eq(&self, o: &Self) -> bool {
        self.terms == o.terms
    }
}

impl Eq for GraphSeries {}

impl GraphSeries {
    pub fn zero(truncation: Truncation) -> Self {
        GraphSeries {
            terms: BTreeMap::new(),
            truncation,
            dropped: 0,
        }
    }

    /// The unit: coefficient 1 on the empty graph.
    pub fn one(truncation: Truncation) -> Self {
        let mut s = GraphSeries::zero(truncation);
        s.add_term(ColoredMultigraph::empty(), Q::one());
        s
    }

    pub fn from_terms(
        terms: impl IntoIterator<Item = (ColoredMultigraph, Q)>,
        truncation: Truncation,
    ) -> Self {
        let mut s = GraphSeries::zero(truncation);
        for (g, c) in terms {
            s.add_term(g, c);
        }
        s
    }

    pub fn single(g: ColoredMultigraph, c: Q, truncation: Truncation) -> Self {
        GraphSeries::from_terms([(g, c)], truncation)
    }

    pub fn truncation(&self) -> Truncation {
        self.truncation
    }

    /// Number of term insertions discarded by truncation so far.
    pub fn dropped(&self) -> usize {
        self.dropped
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&ColoredMultigraph, &Q)> {
        self.terms.iter()
    }

    pub fn coeff(&self, g: &ColoredMultigraph) -> Q {
        self.terms.get(g).cloned().unwrap_or_else(Q::zero)
    }

    /// Adds `c * g`, honoring truncation; zero coefficients are never stored.
    pub fn add_term(&mut self, g: ColoredMultigraph, c: Q) {
        if c.is_zero() {
            return;
        }
        if !self.truncation.admits(&g) {
            self.dropped += 1;
            return;
        }
        match self.terms.entry(g) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Same series under a (tighter or looser) truncation; terms beyond it
    /// are dropped.
    pub fn truncated(&self, truncation: Truncation) -> Self {
        GraphSeries::from_terms(self.terms.clone(), truncation)
    }

    /// Keeps the terms whose graph satisfies `keep`.
    pub fn filter(&self, keep: impl Fn(&ColoredMultigraph) -> bool) -> Self {
        GraphSeries::from_terms(
            self.terms.iter().filter(|(g, _)| keep(g)).map(|(g, c)| (g.clone(), c.clone())),
            self.truncation,
        )
    }

    /// Terms with exactly `e` edges.
    pub fn edge_degree(&self, e: usize) -> Self {
        self.filter(|g| g.edge_count() == e)
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut s = self.truncated(self.truncation.min(o.truncation));
        for (g, c) in &o.terms {
            s.add_term(g.clone(), c.clone());
        }
        s
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Q::one())
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: &Q) -> Self {
        GraphSeries::from_terms(
            self.terms.iter().map(|(g, x)| (g.clone(), x * c)),
            self.truncation,
        )
    }

    /// Disjoint-union product.
    pub fn mul(&self, o: &Self) -> Self {
        let t = self.truncation.min(o.truncation);
        let mut out = GraphSeries::zero(t);
        for (g, c) in &self.terms {
            for (h, d) in &o.terms {
                if g.edge_count() + h.edge_count() > t.max_edges
                    || g.vertex_count() + h.vertex_count() > t.max_vertices
                {
                    out.dropped += 1;
                    continue;
                }
                out.add_term(g.disjoint_union(h), c * d);
            }
        }
        out
    }

    /// Whether every stored graph is connected (the empty graph is not).
    pub fn is_connected_series(&self) -> bool {
        self.terms.keys().all(|g| g.is_connected())
    }

    /// Connected terms only.
    pub fn connected_part(&self) -> Self {
        self.filter(|g| g.is_connected())
    }

    pub fn colors(&self) -> Vec<Color> {
        let mut cs: Vec<Color> = self.terms.keys().flat_map(|g| g.colors().iter().copied()).collect();
        cs.sort();
        cs.dedup();
        cs
    }

    pub fn max_edges_present(&self) -> Option<usize> {
        self.terms.keys().map(|g| g.edge_count()).max()
    }

    pub fn min_edges_present(&self) -> Option<usize> {
        self.terms.keys().map(|g| g.edge_count()).min()
    }
}

/// `sum_k x^k / k!` for a series of connected graphs.
///
/// ```
/// use torus_ki::graph::{graph_exp, Color, ColoredMultigraph, GraphSeries, Truncation};
/// use torus_ki::rational::frac;
/// let t = Truncation::edges(1);
/// let x = GraphSeries::single(ColoredMultigraph::vertex(Color::A), frac(1, 1), t);
/// let e = graph_exp(&x).unwrap();
/// let two = ColoredMultigraph::new(vec![Color::A, Color::A], vec![]).unwrap();
/// assert_eq!(e.coeff(&two), frac(1, 2));
/// ```
pub fn graph_exp(x: &GraphSeries) -> Result<GraphSeries> {
    if !x.is_connected_series() {
        return Err(Error::Disconnected);
    }
    let mut out = GraphSeries::one(x.truncation);
    let mut power = GraphSeries::one(x.truncation);
    let mut k = 0i64;
    loop {
        k += 1;
        power = power.mul(x).scale(&rational::frac(1, k));
        if power.is_empty() {
            break;
        }
        out = out.add(&power);
    }
    Ok(out)
}

/// `log u = sum_k (-1)^(k+1) (u - 1)^k / k` for `u` with unit coefficient 1.
pub fn graph_log(u: &GraphSeries) -> Result<GraphSeries> {
    if !u.coeff(&ColoredMultigraph::empty()).is_one() {
        return Err(Error::MissingUnit);
    }
    let w = u.sub(&GraphSeries::one(u.truncation));
    let mut out = GraphSeries::zero(u.truncation);
    let mut power = GraphSeries::one(u.truncation);
    let mut k = 0i64;
    loop {
        k += 1;
        power = power.mul(&w);
        if power.is_empty() {
            break;
        }
        let sign = if k % 2 == 1 { 1 } else { -1 };
        out = out.add(&power.scale(&rational::frac(sign, k)));
    }
    Ok(out)
}

impl fmt::Display for GraphSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (g, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if i > 0 {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            } else if neg {
                write!(f, "-")?;
            }
            let a = c.abs();
            if a.is_one() {
                write!(f, "{g}")?;
            } else {
                write!(f, "{}·{g}", rational::pretty(&a))?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    graph: ColoredMultigraph,
    coeff: String,
}

impl Serialize for GraphSeries {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<TermJson> = self
            .terms
            .iter()
            .map(|(g, c)| TermJson {
                graph: g.clone(),
                coeff: rational::to_text(c),
            })
            .collect();
        v.serialize(s)
    }
}

impl GraphSeries {
    /// Parses the list-of-terms JSON form. The truncation is not part of the
    /// schema and must be supplied.
    pub fn from_json(s: &str, truncation: Truncation) -> Result<Self> {
        let v: Vec<TermJson> =
            serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        let mut out = GraphSeries::zero(truncation);
        for t in v {
            out.add_term(t.graph, rational::parse(&t.coeff)?);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    const A: Color = Color::A;
    const B: Color = Color::B;

    fn v(c: Color) -> ColoredMultigraph {
        ColoredMultigraph::vertex(c)
    }

    #[test]
    fn exp_of_zero_is_unit() {
        let t = Truncation::edges(2);
        let e = graph_exp(&GraphSeries::zero(t)).unwrap();
        assert_eq!(e, GraphSeries::one(t));
    }

    #[test]
    fn exp_of_vertex() {
        let t = Truncation::edges(2); // at most 3 vertices
        let e = graph_exp(&GraphSeries::single(v(A), int(1), t)).unwrap();
        assert_eq!(e.len(), 4);
        let three = ColoredMultigraph::new(vec![A, A, A], vec![]).unwrap();
        assert_eq!(e.coeff(&three), frac(1, 6));
    }

    #[test]
    fn exp_rejects_disconnected() {
        let t = Truncation::edges(2);
        let two = ColoredMultigraph::new(vec![A, B], vec![]).unwrap();
        assert_eq!(
            graph_exp(&GraphSeries::single(two, int(1), t)),
            Err(Error::Disconnected)
        );
    }

    #[test]
    fn log_of_one_is_zero() {
        let t = Truncation::edges(3);
        assert!(graph_log(&GraphSeries::one(t)).unwrap().is_empty());
        assert_eq!(graph_log(&GraphSeries::zero(t)), Err(Error::MissingUnit));
    }

    #[test]
    fn log_exp_round_trip() {
        let t = Truncation::edges(3);
        let ab = ColoredMultigraph::path(&[A, B], &[1]).unwrap();
        let x = GraphSeries::from_terms([(v(A), int(1)), (ab, int(1))], t);
        let back = graph_log(&graph_exp(&x).unwrap()).unwrap();
        assert_eq!(back, x);
    }

    #[test]
    fn json_round_trip() {
        let t = Truncation::edges(2);
        let ab = ColoredMultigraph::path(&[A, B], &[1]).unwrap();
        let x = GraphSeries::from_terms([(v(A), int(1)), (ab, frac(-1, 6))], t);
        let j = serde_json::to_string(&x).unwrap();
        assert_eq!(
            j,
            r#"[{"graph":{"colors":["a"],"edges":[]},"coeff":"1/1"},{"graph":{"colors":["a","b"],"edges":[[0,1]]},"coeff":"-1/6"}]"#
        );
        assert_eq!(GraphSeries::from_json(&j, t).unwrap(), x);
    }
}
