//! The substitution map on small gluing graphs: resolutions into circles,
//! the telescoping reduction at each circle, the `B'` degree, and leg-count
//! projections used to compare against explicit wheel gluing.

mod profile;
mod reduce;
mod resolve;
mod terms;

pub use profile::{
    brute_force_glue, brute_force_vertex, fit_normalization, leg_profile_of_tree, symbolic_leg_profile,
    wheel_series, LegProfile, VertexSeries, BRUTE_FORCE_MAX_DEGREE, BRUTE_FORCE_MAX_EDGES,
};
pub use reduce::{evaluate_fragments, gluing_sum, reduce_term, reduce_term_random, reduce_term_with, Fragment};
pub use resolve::{resolve, Class, ResolvedDiagram, SkeletonEdge, MAX_RESOLVE_EDGES};
pub use terms::{bprime_degree, degree_summary, substitute, DegreeSummary, Substitution, SubstitutionTerm, VertexFactor};
