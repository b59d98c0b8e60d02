//! Toric varieties from fans: smoothness, completeness, Hodge numbers,
//! divisors and their Cartier data, projective bundles and contractions.

mod bundle;
mod divisor;
mod fan;
mod mpcp;

pub use bundle::{
    bundle_hyperplane, bundle_section_rays, is_calabi_yau_cover, is_fano, projective_bundle_fan,
    semiample_contraction, Contraction,
};
pub use divisor::{linearly_equivalent, CartierData, ToricDivisor};
pub use fan::{face_fan, normal_fan, resolve_surface_fan, Fan};
pub use mpcp::{mpcp_fan, MpcpFan};
