//! Exact synthetic-differential-geometry toolkit: first-neighbourhood
//! algebra, infinitesimal and singular cubes, cubical groupoids,
//! combinatorial forms, connections and holonomy, all over the rationals.

pub mod algebra;
mod error;
pub mod connection;
pub mod cubical;
pub mod forms;
pub mod groupoid;
pub mod holonomy;
pub mod io;
pub mod random;
pub mod suites;
pub mod weil;

pub use error::{Error, Result};
