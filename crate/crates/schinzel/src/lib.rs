//! JSON formats, a content-addressed result cache, the parallel candidate
//! search and the `schinzel` command line on top of `schinzel-core`.

pub mod cache;
pub mod dossier;
mod error;
pub mod json;
pub mod search;

pub use error::{CliError, CliResult};

/// Overrides the group order bound.
pub const ORDER_BOUND_ENV: &str = "SCHINZEL_ORDER_BOUND";
/// Overrides the cache directory.
pub const CACHE_DIR_ENV: &str = "SCHINZEL_CACHE_DIR";

/// Order bound from the environment, else the core default.
pub fn order_bound_from_env() -> CliResult<usize> {
    match std::env::var(ORDER_BOUND_ENV) {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{ORDER_BOUND_ENV}={s} is not a number"))),
        Err(_) => Ok(schinzel_core::DEFAULT_ORDER_BOUND),
    }
}

pub fn cache_dir_from_env() -> std::path::PathBuf {
    std::env::var_os(CACHE_DIR_ENV)
        .map(Into::into)
        .unwrap_or_else(|| std::env::temp_dir().join("schinzel-cache"))
}
