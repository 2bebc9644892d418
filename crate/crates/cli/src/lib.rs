//! Library side of the `polya` command: group sources, count requests with
//! oracle cross-checks, and scaling benchmarks.

pub mod bench;
pub mod count;
mod error;
pub mod source;

pub use bench::{equal_split, parse_range, BenchPlan, BenchRecord, Sweep};
pub use count::{parse_colors, run_count, CountRequest, OracleMode};
pub use error::CliError;
pub use source::parse_group_source;
