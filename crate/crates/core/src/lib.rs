//! Geometric systems of unbiased representatives.
//!
//! Given points with a family of red/blue colorings, a G-SUR is a set of
//! geometric ranges (intervals, boxes, balls) such that every coloring has a
//! range holding equally many red and blue points. This crate builds such
//! systems explicitly, finds minimal ones by set-cover search, generates the
//! instance families where the explicit bounds are tight, and simulates
//! balanced intervals of random colorings.

pub mod constructions;
pub mod error;
pub mod gabriel;
pub mod instances;
pub mod io;
pub mod model;
pub mod random_sim;
pub mod solver;

pub use error::{Error, Result};
pub use model::{
    balance_count, is_balanced, Bicoloring, BicoloringFamily, Color, ColorCount, GSur, PointSet,
    Range,
};
