//! Exact combinatorics and linear algebra for cluster-tilted algebras with
//! cyclically oriented quivers.

pub mod algebra;
pub mod cli;
pub mod cuts;
pub mod cycles;
pub mod extension;
pub mod fixtures;
pub mod forms;
pub mod error;
pub mod iso;
pub mod linalg;
pub mod mutation;
pub mod quiver;

pub use error::{Error, Result};
pub use quiver::{Arrow, Path, Quiver};
