//! Block matrices, minors and the determinantal ideal families.

pub mod families;
pub mod induction;
pub mod minors;
pub mod shape;
pub mod spec;

pub use families::{
    double_det_generators, hat_diagram, lambda_family_generators, s3_family_generators, DiagramFamily,
    SectionThreeFamily,
};
pub use induction::{
    admissible_cells, induction_step, induction_step_at, s3_induction_step, select_removal_cell, DiagramStep,
    SectionThreeStep, YCell,
};
pub use minors::{
    augment_minor, diagonal_monomials, enumerate_minors, leading_monomial_ideal, minor_determinant,
    verify_diagonal_order, DiagonalWitness, Generator, GeneratorSet, Provenance, Source,
};
pub use shape::{build_region, BlockMatrixShape, Orientation, Region, YoungDiagram};
pub use spec::{Family, FamilyKind, IdealSpec};
