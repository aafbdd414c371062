//! Runs the code blocks of the book under `book/src` as doctests, one module
//! per chapter. Not meant to be used as a library.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/series.md")]
pub mod series {}
#[doc = include_str!("../../../book/src/graphs.md")]
pub mod graphs {}
#[doc = include_str!("../../../book/src/recursion.md")]
pub mod recursion {}
#[doc = include_str!("../../../book/src/trees.md")]
pub mod trees {}
#[doc = include_str!("../../../book/src/substitution.md")]
pub mod substitution {}
#[doc = include_str!("../../../book/src/covering.md")]
pub mod covering {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
