use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Color;
use crate::rational::{gcd_i64, int, Q};

/// Torus knot parameters with the edge budget of the gluing-graph series.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TorusParams {
    p: i64,
    q: i64,
    e_max: usize,
}

impl TorusParams {
    pub fn new(p: i64, q: i64, e_max: usize) -> Result<Self> {
        if p < 2 {
            return Err(Error::InvalidParameter(format!("p must be at least 2 (got {p})")));
        }
        if q.abs() < 2 {
            return Err(Error::InvalidParameter(format!("|q| must be at least 2 (got {q})")));
        }
        if gcd_i64(p, q) != 1 {
            return Err(Error::NotCoprime { p, q });
        }
        Ok(TorusParams { p, q, e_max })
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn e_max(&self) -> usize {
        self.e_max
    }

    pub fn with_e_max(&self, e_max: usize) -> Self {
        TorusParams { e_max, ..*self }
    }

    /// Parameters with `p` and `q` exchanged (only valid when `q >= 2`).
    pub fn swapped(&self) -> Result<Self> {
        TorusParams::new(self.q, self.p, self.e_max)
    }

    /// Scale attached to a color: `a -> p`, `b -> q`, `c -> pq`, `* -> 1`.
    pub fn scale(&self, c: Color) -> i64 {
        match c {
            Color::A => self.p,
            Color::B => self.q,
            Color::C => self.p * self.q,
            _ => 1,
        }
    }

    pub fn scale_q(&self, c: Color) -> Q {
        int(self.scale(c))
    }
}

/// The symbolic name of a color's scale.
pub fn scale_label(c: Color) -> &'static str {
    match c {
        Color::A => "p",
        Color::B => "q",
        Color::C => "pq",
        _ => "1",
    }
}

impl fmt::Display for TorusParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T({}, {}), e_max = {}", self.p, self.q, self.e_max)
    }
}
