//! Generalized virtual polytopes: subordinate maps, winding numbers, the
//! weighted chain of bounded regions, integration over it, and the volume
//! polynomial computed independently from facet determinants.

mod chain;
mod subordinate;
mod volume;

pub use chain::{
    chain_volume, integrate, integrate_monomial_simplex, integrate_over_simplex, virtual_chain, VirtualChain,
};
pub use subordinate::{
    distinguished_points, subordinate_map, winding_number, winding_number_seeded, ImageSimplex, SubordinateMap,
};
pub use volume::{
    derivative_value, finite_difference, integral_value, lagrange_derivative_weights, mixed_volume,
    translation_operators, volume_polynomial, VolumeDerivatives,
};
