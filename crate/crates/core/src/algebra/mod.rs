//! Presentations `kQ/I`: relations, standard relations, path spaces and homotopy.

pub mod homotopy;
pub mod pathspace;
pub mod relation;
pub mod standard;

pub use homotopy::{first_homology, homotopy_classes, FirstHomology};
pub use pathspace::{path_space, path_space_with, AlgebraOptions, PathAlgebra, PathSpaceBasis};
pub use relation::{Presentation, Relation, Term};
pub use standard::{
    check_r1_r2, cyclic_arrows, normalize_coefficients, rescale_relations, standard_relations, Normalization,
    ShapeCheck,
};
