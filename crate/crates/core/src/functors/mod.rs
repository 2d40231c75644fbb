//! The contravariant constructions between étale categories and restriction
//! quantal frames: Ω on categories and covering functors, C on quantal frames
//! and their morphisms.

mod filters;
mod morphisms;
mod omega;

pub use filters::{
    c_object, filter_calculus_laws, filter_plus, filter_product, filter_star, identity_space_vs_pt,
    FilterCategoryResult,
};
pub use morphisms::{c_morphism, omega_morphism};
pub use omega::{omega_object, OmegaResult};
