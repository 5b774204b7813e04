//! Arrangements of affine subspaces and hyperplanes: intersections,
//! nerves, region enumeration with exact volumes, tail cones and the
//! homotopy reports derived from them.

mod arrangement;
mod homotopy;
mod regions;
mod subspace;
mod tail;

pub use arrangement::{
    build_arrangement, compatible_map_exists, dominates, nerve, realize_nerve, Nerve, SubspaceArrangement,
};
pub use homotopy::{normal_rank, stratify, union_homotopy, Stratum, UnionHomotopy};
pub use regions::{enumerate_regions, sign_string, simplex_volume, Region};
pub use subspace::AffineSubspace;
pub use tail::{complement_homotopy, tail_cone, ComplementReport, TailCone};
