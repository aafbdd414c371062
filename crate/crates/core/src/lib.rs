//! Exact computation of the rational, unwheeled Kontsevich integral of torus
//! knots as a series of bubble-tree diagrams.

pub mod covering;
pub mod error;
pub mod rational;
pub mod graph;
pub mod series;
pub mod substitution;
pub mod torus;
pub mod verify;

pub use error::{Error, Result};
pub use rational::Q;
