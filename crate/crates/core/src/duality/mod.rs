//! Comparison maps `χ : Q → Ω(C(Q))` and `ω : C → C(Ω(C))`, morphism
//! validation, hom-set enumeration and the first adjunction.

mod adjunction;
mod chi;
mod iso;
mod morphism;
mod omega_map;

pub use adjunction::{rqf_morphisms, transpose_backward, transpose_forward, verify_adjunction_i, AdjunctionReport};
pub use chi::{build_chi, is_spatial, ChiResult};
pub use iso::category_isomorphism;
pub use morphism::{is_rqf_morphism, validate_rqf_morphism};
pub use omega_map::{build_omega_map, is_sober, OmegaMapResult};
