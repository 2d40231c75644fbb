//! Finite étale categories, restriction quantal frames, complete restriction
//! monoids, and the constructions relating them, checked exhaustively.

pub mod crm;
pub mod duality;
pub mod error;
pub mod functors;
pub mod limits;
pub mod order;
pub mod quantale;
pub mod report;
pub mod sets;
pub mod table;
pub mod topcat;
pub mod topology;
pub mod workbench;

pub use error::{Error, Result};
pub use limits::Limits;
pub use report::{Check, Report, Status, Witness};
