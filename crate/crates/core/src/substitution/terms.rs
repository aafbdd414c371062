//! Substitution terms of a gluing graph and their degree in `B'`.

use serde::Serialize;

use crate::error::Result;
use crate::graph::ColoredMultigraph;

use super::reduce::{reduce_term, Fragment};
use super::resolve::{resolve, Class, ResolvedDiagram};

/// What one circle contributes to a term.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum VertexFactor {
    /// A bare circle: the vertex series itself in the circle class.
    Wheel { class: Class },
    Reduced(Fragment),
}

impl VertexFactor {
    pub fn p(&self) -> usize {
        match self {
            VertexFactor::Wheel { .. } => 0,
            VertexFactor::Reduced(f) => f.p(),
        }
    }

    pub fn class(&self) -> &Class {
        match self {
            VertexFactor::Wheel { class } => class,
            VertexFactor::Reduced(f) => &f.class,
        }
    }

    pub fn denominators(&self) -> &[Class] {
        match self {
            VertexFactor::Wheel { .. } => &[],
            VertexFactor::Reduced(f) => &f.denominators,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubstitutionTerm {
    /// Index of the resolution this term belongs to.
    pub diagram: usize,
    pub factors: Vec<VertexFactor>,
    pub p_list: Vec<usize>,
    pub bprime_degree: i64,
}

/// `-Σ p_i`: each linear denominator lowers the degree by one.
pub fn bprime_degree(t: &SubstitutionTerm) -> i64 {
    -(t.factors.iter().map(VertexFactor::p).sum::<usize>() as i64)
}

#[derive(Clone, Debug, Serialize)]
pub struct Substitution {
    pub source: ColoredMultigraph,
    pub diagrams: Vec<ResolvedDiagram>,
    pub terms: Vec<SubstitutionTerm>,
}

fn expand(diagram: usize, per_vertex: &[Vec<VertexFactor>], out: &mut Vec<SubstitutionTerm>) {
    let mut idx = vec![0usize; per_vertex.len()];
    loop {
        let factors: Vec<VertexFactor> = idx.iter().zip(per_vertex).map(|(&i, f)| f[i].clone()).collect();
        let mut t = SubstitutionTerm {
            diagram,
            p_list: factors.iter().map(VertexFactor::p).collect(),
            factors,
            bprime_degree: 0,
        };
        t.bprime_degree = bprime_degree(&t);
        out.push(t);
        let mut v = 0;
        while v < idx.len() {
            idx[v] += 1;
            if idx[v] < per_vertex[v].len() {
                break;
            }
            idx[v] = 0;
            v += 1;
        }
        if v == idx.len() {
            return;
        }
    }
}

/// All resolutions of `g` and the reduced terms of each.
pub fn substitute(g: &ColoredMultigraph) -> Result<Substitution> {
    let diagrams = resolve(g)?;
    let mut terms = Vec::new();
    for (i, d) in diagrams.iter().enumerate() {
        let per_vertex: Vec<Vec<VertexFactor>> = (0..g.vertex_count())
            .map(|v| {
                if d.arc_classes[v].is_empty() {
                    vec![VertexFactor::Wheel {
                        class: d.circle_classes[v].clone(),
                    }]
                } else {
                    reduce_term(&d.arc_classes[v]).into_iter().map(VertexFactor::Reduced).collect()
                }
            })
            .collect();
        expand(i, &per_vertex, &mut terms);
    }
    Ok(Substitution {
        source: g.clone(),
        diagrams,
        terms,
    })
}

/// Degree statistics of a substitution.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeSummary {
    pub source: ColoredMultigraph,
    pub is_tree: bool,
    pub resolutions: usize,
    pub terms: usize,
    pub max_degree: i64,
    pub degree_zero_terms: usize,
    /// Every degree-0 term has all `p_i = 0`.
    pub degree_zero_untouched: bool,
}

pub fn degree_summary(g: &ColoredMultigraph) -> Result<DegreeSummary> {
    let s = substitute(g)?;
    let zero: Vec<&SubstitutionTerm> = s.terms.iter().filter(|t| t.bprime_degree == 0).collect();
    Ok(DegreeSummary {
        source: g.clone(),
        is_tree: g.is_tree() && !g.has_multi_edges(),
        resolutions: s.diagrams.len(),
        terms: s.terms.len(),
        max_degree: s.terms.iter().map(|t| t.bprime_degree).max().unwrap_or(0),
        degree_zero_terms: zero.len(),
        degree_zero_untouched: zero.iter().all(|t| t.p_list.iter().all(|&p| p == 0)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Color;

    fn path(c: &[Color], m: &[usize]) -> ColoredMultigraph {
        ColoredMultigraph::path(c, m).unwrap()
    }

    #[test]
    fn trees_have_degree_zero() {
        for g in [
            ColoredMultigraph::vertex(Color::A),
            path(&[Color::A, Color::B], &[1]),
            path(&[Color::A, Color::B, Color::A], &[1, 1]),
        ] {
            let s = degree_summary(&g).unwrap();
            assert!(s.is_tree);
            assert_eq!(s.max_degree, 0);
            assert_eq!(s.degree_zero_terms, s.terms);
            assert!(s.degree_zero_untouched);
        }
    }

    #[test]
    fn cycles_have_negative_degree() {
        let tri = ColoredMultigraph::new(vec![Color::A, Color::B, Color::C], vec![(0, 1), (1, 2), (0, 2)]).unwrap();
        for g in [path(&[Color::A, Color::B], &[2]), path(&[Color::A, Color::B], &[3]), tri] {
            let s = degree_summary(&g).unwrap();
            assert!(!s.is_tree);
            assert!(s.max_degree <= -1, "{g}");
            assert_eq!(s.degree_zero_terms, 0);
        }
    }

    #[test]
    fn k_one_contributes_zero() {
        let s = substitute(&path(&[Color::A, Color::B], &[1])).unwrap();
        assert_eq!(s.terms.len(), 1);
        assert_eq!(s.terms[0].p_list, vec![0, 0]);
    }
}
