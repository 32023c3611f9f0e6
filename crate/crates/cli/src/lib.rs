//! Library side of the `qtr` command-line tool: parameter resolution, sweep
//! evaluation, verification suites, and figure/table data emission. The
//! binary in `main.rs` only parses flags and routes to these modules; all
//! numerical content lives in `qtr-core`.

pub mod figures;
pub mod output;
pub mod params;
pub mod report;
pub mod steady;
pub mod suites;
pub mod sweep;
pub mod table;

/// Default seed of the randomized verification draws; overridden by the
/// `QTR_SEED` environment variable, which is in turn overridden by `--seed`.
pub const DEFAULT_SEED: u64 = 20260810;
