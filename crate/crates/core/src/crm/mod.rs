//! Complete restriction monoids, their translation to and from restriction
//! quantal frames, callitic morphisms, completely prime filters and the
//! second adjunction.

mod adjunction;
mod lvee;
mod monoid;
mod morphism;
mod sfilter;

pub use adjunction::{verify_adjunction_ii, AdjunctionIIReport};
pub use lvee::{crm_isomorphism_check, l_vee, roundtrip_monoid, roundtrip_quantale, rqf_isomorphism_check, LveeResult};
pub use monoid::{pi_restriction_monoid, validate_crm, Crm, CrmData};
pub use morphism::{
    callitic_morphisms, filters_meet_image, is_callitic, proper_check, theta_extension, validate_callitic,
    validate_crm_morphism,
};
pub use sfilter::{cp_generators, lift_map, s_filter_correspondence, s_filters, SFilterCategory};
