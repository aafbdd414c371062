//! The torus-knot recursion and the bubble trees of its limit.

mod boxed;
mod latex;
mod params;
mod recursion;
mod trees;

pub use boxed::{parse_boxed, OMEGA_MINUS_ONE, OMEGA_ONE, OMEGA_TWO_MINUS_ONE, X_PQ};
pub use latex::{document, series_latex, trees_latex};
pub use params::{scale_label, TorusParams};
pub use recursion::{iterate, pq_projection, recursion_step, x_minus_one, x_pq_limit, x_zero, Iteration};
pub use trees::{
    decorate, extract_trees, one_loop_part, vertex_normalization, y_rat, Decoration, DecoratedTree, VertexDecoration,
};
