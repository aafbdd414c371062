//! Exact arithmetic backbone: polynomials and rational functions in `t`,
//! truncated Laurent series in `x`, and the special functions built on them.

mod laurent;
mod poly;
mod ratfunc;
mod special;

pub use laurent::LaurentSeries;
pub use poly::Poly;
pub use ratfunc::RationalFunction;
pub use special::{
    alexander_torus, apply_d, h_function, hair_expand, hair_expand_bounded, series_f, wh_series,
    DEFAULT_MAX_POLE,
};
