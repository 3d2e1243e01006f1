//! Text formats, parallel sweeps and chord diagrams on top of
//! [`edgecrit_core`]. The `edgecrit` binary is a thin front end over this
//! library.

pub mod error;
pub mod formats;
pub mod report;
pub mod svg;
pub mod sweep;

pub use edgecrit_core as core;
pub use error::{Error, Result};
