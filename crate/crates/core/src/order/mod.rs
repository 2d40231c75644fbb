//! Finite posets, lattices and frames; their completely prime filters and
//! the space of points.

mod lattice;
mod points;
mod poset;

pub use lattice::{is_frame, FiniteFrame, FiniteLattice};
pub use points::{
    cp_filter_from_members, enumerate_cp_filters, frame_spatial_check, meet_prime_elements, pt_topology, CpFilter,
    PointSpace,
};
pub use poset::{validate_poset, FinitePoset};
