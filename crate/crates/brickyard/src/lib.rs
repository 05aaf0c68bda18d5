//! File formats, rendering and verification suites on top of `brickyard-core`.

pub mod error;
pub mod json;
pub mod render;
pub mod suites;

pub use error::CliError;

use brickyard_core::field::{Field, DEFAULT_CHAR};

/// The oracle field: `BRICKYARD_CHAR` when set, otherwise the default prime.
pub fn field_from_env() -> Result<Field, CliError> {
    match std::env::var("BRICKYARD_CHAR") {
        Ok(v) => {
            let p: u64 = v
                .trim()
                .parse()
                .map_err(|_| CliError::Input(format!("BRICKYARD_CHAR={v:?} is not a number")))?;
            Ok(Field::new(p)?)
        }
        Err(_) => Ok(Field::new(DEFAULT_CHAR)?),
    }
}
