// matrix code indexes by vertex
#![allow(clippy::needless_range_loop)]

pub mod error;
pub mod half;
pub mod acceptance;
pub mod blockgraph;
pub mod charring;
pub mod cli;
pub mod diagrams;
pub mod dsfunctor;
pub mod rootdata;

pub use error::{Error, Result};
pub use half::Half;
pub use rootdata::{build_algebra, Algebra, Kind, Weight};
