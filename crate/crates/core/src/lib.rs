//! Exact truncated q-series, restricted partition enumeration, and a
//! verification harness for truncated theta-series identities.

pub mod error;
pub mod generating;
pub mod harness;
pub mod partition;
pub mod pochhammer;
pub mod series;

pub use error::{Error, Result};
pub use generating::GenName;
pub use series::TruncatedSeries;
