//! Chain builders for every supported policy and strategy combination.

mod multi;
mod phase;
mod single;
mod three;

use thiserror::Error;

pub use multi::{build_multi_source, build_two_source_lcfs_s, super_source_reduction};
pub use phase::{build_constant_wakeup, build_zipf_arrival};
pub use single::build_single_source;
pub use three::build_three_source;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum BuildError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("unsupported configuration: {0}")]
    UnsupportedConfig(String),
    #[error("unsupported strategy: {0}")]
    UnsupportedStrategy(String),
}

fn rate_of_mean(mean: f64) -> f64 {
    1.0 / mean
}
