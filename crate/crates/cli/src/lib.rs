//! JSON/CSV file formats, the `bargmann` command line front end and the
//! claims suite run by `bargmann verify`.

pub mod claims;
pub mod commands;
pub mod error;
pub mod io;

pub use error::{CliError, Result};
