//! The sequence `X^n` of gluing-graph series and its limit `X_{p,q}`.
//!
//! Colors: `*` is the active vertex, `a`, `b`, `c` are inert with scales
//! `p`, `q`, `pq`. The projection `X^k -> X^k_pq` rescales the active color
//! by `pq` and then renames it `c`; rescaling after renaming would also
//! rescale the `c` vertices already present.

use crate::error::{Error, Result};
use crate::graph::{glue_log, relabel, rescale, vertex_series, Color, GraphSeries, Truncation};
use crate::rational::int;

use super::params::TorusParams;

const INERT: [Color; 3] = [Color::A, Color::B, Color::C];

fn truncation(params: &TorusParams) -> Truncation {
    Truncation::edges(params.e_max())
}

/// `X^{-1}_pq = a^p b^q (•a × •b)`.
pub fn x_minus_one(params: &TorusParams) -> GraphSeries {
    let t = truncation(params);
    let glued = glue_log(&vertex_series(Color::A, t), &vertex_series(Color::B, t), &[Color::A], &[Color::B])
        .expect("disjoint connected inputs");
    let x = rescale(&glued, Color::A, &int(params.p())).expect("nonzero scale");
    rescale(&x, Color::B, &int(params.q())).expect("nonzero scale")
}

/// `X^0 = •*`.
pub fn x_zero(params: &TorusParams) -> GraphSeries {
    vertex_series(Color::ACTIVE, truncation(params))
}

/// `X^k -> X^k_pq`: rescale `*` by `pq`, then rename `*` to `c`.
pub fn pq_projection(x: &GraphSeries, params: &TorusParams) -> GraphSeries {
    let pq = int(params.p() * params.q());
    let scaled = rescale(x, Color::ACTIVE, &pq).expect("nonzero scale");
    relabel(&scaled, &[(Color::ACTIVE, Color::C)])
}

/// `X^{n+1} = (X^{n-1}_pq - X^n_pq) ×_{abc,*} X^n - (X^{n-1}_pq - X^n_pq)`.
pub fn recursion_step(x_prev_pq: &GraphSeries, x_cur: &GraphSeries, x_cur_pq: &GraphSeries) -> Result<GraphSeries> {
    let d = x_prev_pq.sub(x_cur_pq);
    if let Some(c) = d.colors().into_iter().find(|c| !INERT.contains(c)) {
        return Err(Error::InvalidParameter(format!(
            "projected series must be colored by a, b, c (found {c})"
        )));
    }
    Ok(glue_log(&d, x_cur, &INERT, &[Color::ACTIVE])?.sub(&d))
}

/// The iterates of the recursion up to stabilization.
#[derive(Clone, Debug)]
pub struct Iteration {
    /// `X^{-1}_pq`.
    pub x_minus_one: GraphSeries,
    /// `X^0, X^1, ...` (unprojected).
    pub iterates: Vec<GraphSeries>,
    /// `X^0_pq, X^1_pq, ...`.
    pub projected: Vec<GraphSeries>,
}

impl Iteration {
    /// Number of recursion steps performed.
    pub fn steps(&self) -> usize {
        self.iterates.len() - 1
    }

    /// `X^{n+1}_pq - X^n_pq`.
    pub fn difference(&self, n: usize) -> Option<GraphSeries> {
        Some(self.projected.get(n + 1)?.sub(&self.projected[n]))
    }

    /// `X^{-1}_pq - X^n_pq` for the last computed `n`.
    pub fn limit(&self) -> GraphSeries {
        self.x_minus_one.sub(self.projected.last().expect("X^0 is always present"))
    }
}

/// Runs the recursion until two successive projections agree, or fails
/// after `e_max + 3` steps.
pub fn iterate(params: &TorusParams) -> Result<Iteration> {
    let cap = params.e_max() + 3;
    let x0 = x_zero(params);
    let mut it = Iteration {
        x_minus_one: x_minus_one(params),
        projected: vec![pq_projection(&x0, params)],
        iterates: vec![x0],
    };
    for n in 0..cap {
        let prev_pq = if n == 0 { &it.x_minus_one } else { &it.projected[n - 1] };
        let next = recursion_step(prev_pq, &it.iterates[n], &it.projected[n])?;
        let next_pq = pq_projection(&next, params);
        let stable = next_pq == it.projected[n];
        it.iterates.push(next);
        it.projected.push(next_pq);
        if stable {
            return Ok(it);
        }
    }
    Err(Error::NoStabilization(cap))
}

/// `X_{p,q} = lim (X^{-1}_pq - X^n_pq)`, truncated at `e_max` edges.
pub fn x_pq_limit(params: &TorusParams) -> Result<GraphSeries> {
    Ok(iterate(params)?.limit())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::ColoredMultigraph;
    use crate::rational::frac;

    fn path(c: &[Color], m: &[usize]) -> ColoredMultigraph {
        ColoredMultigraph::path(c, m).unwrap()
    }

    #[test]
    fn x_minus_one_terms() {
        let params = TorusParams::new(2, 3, 2).unwrap();
        let x = x_minus_one(&params);
        assert_eq!(x.coeff(&ColoredMultigraph::vertex(Color::A)), frac(1, 1));
        assert_eq!(x.coeff(&path(&[Color::A, Color::B], &[1])), frac(1, 6));
        assert_eq!(x.coeff(&path(&[Color::A, Color::B], &[2])), frac(1, 36));
    }

    #[test]
    fn zero_difference_is_identity() {
        let params = TorusParams::new(2, 3, 2).unwrap();
        let x1 = x_minus_one(&params);
        let x0 = x_zero(&params);
        let same = pq_projection(&x1, &params);
        assert_eq!(recursion_step(&same, &x0, &same).unwrap(), x0);
    }

    #[test]
    fn active_color_rejected_in_difference() {
        let params = TorusParams::new(2, 3, 1).unwrap();
        let x0 = x_zero(&params);
        let zero = GraphSeries::zero(Truncation::edges(1));
        assert!(recursion_step(&x0, &x0, &zero).is_err());
    }

    #[test]
    fn low_degree_limit() {
        let params = TorusParams::new(2, 3, 1).unwrap();
        let x = x_pq_limit(&params).unwrap();
        let v = |c| ColoredMultigraph::vertex(c);
        assert_eq!(x.coeff(&v(Color::A)), frac(1, 1));
        assert_eq!(x.coeff(&v(Color::B)), frac(1, 1));
        assert_eq!(x.coeff(&v(Color::C)), frac(-1, 1));
        assert_eq!(x.coeff(&path(&[Color::A, Color::B], &[1])), frac(1, 6));
        assert_eq!(x.coeff(&path(&[Color::A, Color::C], &[1])), frac(-1, 6));
        assert_eq!(x.coeff(&path(&[Color::B, Color::C], &[1])), frac(-1, 6));
        assert_eq!(x.coeff(&path(&[Color::C, Color::C], &[1])), frac(1, 6));
        assert_eq!(x.len(), 7);
    }

    fn displays(p: i64, q: i64) {
        use crate::torus::boxed::{parse_boxed, OMEGA_MINUS_ONE, OMEGA_ONE, OMEGA_TWO_MINUS_ONE, X_PQ};
        let params = TorusParams::new(p, q, 2).unwrap();
        let it = iterate(&params).unwrap();
        let upto2 = |x: &GraphSeries| x.truncated(Truncation::edges(2));
        assert_eq!(it.x_minus_one, parse_boxed(OMEGA_MINUS_ONE, &params).unwrap());
        assert_eq!(upto2(&it.iterates[1]), parse_boxed(OMEGA_ONE, &params).unwrap());
        assert_eq!(
            upto2(&it.iterates[2].sub(&it.iterates[1])),
            parse_boxed(OMEGA_TWO_MINUS_ONE, &params).unwrap()
        );
        assert_eq!(it.limit(), parse_boxed(X_PQ, &params).unwrap());
    }

    #[test]
    fn displays_2_3() {
        displays(2, 3);
    }

    #[test]
    fn displays_2_5() {
        displays(2, 5);
    }
}
