//! The graded algebra `Diff / Ann(Vol)` of a characteristic pair, its
//! Stanley–Reisner presentation, and the relation checks tying the two to
//! the volume polynomial.
//!
//! For general torus manifolds this algebra is only the duality quotient of
//! the subring generated in degree 2; for pairs coming from complete
//! simplicial fans the cell decomposition makes it the full even cohomology.

mod algebra;
mod operator;
mod relations;
mod stanley_reisner;

pub use algebra::{betti, macaulay_algebra, poincare_check, Class, DualityReport, GradedAlgebra, GradedPiece};
pub use operator::{annihilator, Annihilator, DiffOperator};
pub use relations::{
    character_basis, cohomology_ring, intersection_number, linear_relation_check, linear_relation_check_for,
    self_intersection, top_product, top_product_in, top_products, LinearRelationCheck,
};
pub use stanley_reisner::{sr_quotient_dims, SRPresentation};
