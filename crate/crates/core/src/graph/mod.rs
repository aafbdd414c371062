//! Gluing graphs: canonical colored multigraphs and truncated rational
//! series of them, with the Hopf `exp`/`log`, the edge-gluing product, the
//! `a^r` rescaling and recoloring.

mod glue;
mod multigraph;
mod series;

pub(crate) use multigraph::UnionFind;
pub use glue::{glue_log, glue_product, relabel, rescale, vertex_series};
pub use multigraph::{Color, ColoredMultigraph};
pub use series::{graph_exp, graph_log, GraphSeries, Truncation};
