//! Torus-action calculus on simply connected 4-manifolds: orbit data
//! validation, the sphere configuration over the orbit-space boundary, the
//! intersection-form classification, and the barycentric synthesis of a
//! pinwheel structure from the action.

mod orbit;
mod sampling;

pub use orbit::{
    barycentric_pinwheel, classify_action, parse_orbit_data, sphere_geometry,
    validate_orbit_data, ClassificationResult, OrbitData, OrbitDataParseError, OrbitError,
    SphereConfig,
};
pub use sampling::{random_valid_orbit_data, SplitMix64};
