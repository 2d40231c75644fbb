//! Finite categories, finite topologies on their arrows, the étale
//! condition, local bisections and covering functors.

mod bisection;
mod category;
mod etale;
mod functor;

pub use bisection::{is_local_bisection, local_bisections};
pub use category::{validate_category, CategoryData, FiniteCategory};
pub use etale::{c_o_is_open, etale_report, is_etale, validate_topcat, TopCategory};
pub use functor::{
    compose_maps, continuity_check, covering_functors, identity_map, is_covering_functor, validate_covering_functor,
};
