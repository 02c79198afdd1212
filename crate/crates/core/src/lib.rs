//! Exact Farey-tessellation arithmetic and upper bounds for the complexity
//! of Dehn surgeries on the figure-eight knot.
//!
//! The bound `ω(p/q)` is available in closed form ([`omega`]) and can be
//! rebuilt by assembling blocks with known spine vertex counts along the
//! Farey tessellation ([`pipeline`]). Flip distances between theta-curve
//! classes come from a search-free walk in the dual tree
//! ([`geodesic_distance`]) that is checked against plain breadth-first
//! search ([`bfs_distance`]).

pub mod assembly;
pub mod error;
pub mod farey;
pub mod rationals;
pub mod surgery;
pub mod verify;

pub use assembly::{
    assemble, flip_block, knot_exterior_block, solid_torus_block, AssemblyResult, Block, BoundaryTorus,
};
pub use error::{Error, Result};
pub use farey::{
    base_triangle, bfs_distance, closest_triangle_with_vertex, flip, flip_path, geodesic_distance, neighbor,
    unimodular, FareyTriangle, FlipPath, Slope,
};
pub use rationals::{expand_cf, normalize, s_sum, ContinuedFraction, SurgeryCoefficient};
pub use surgery::{
    a_value, classify, distance_identities, enumerate_omega_le, omega, pipeline, report, Enumeration, Hyperbolicity,
    OmegaReport,
};
