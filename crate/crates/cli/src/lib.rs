//! Command-line front end for the verification kernel: single checks,
//! orbit-data classification, fundamental-group runs, Seiberg-Witten
//! bookkeeping, and the full reproducibility report.

pub mod jsonio;
pub mod pretty;
pub mod report;
pub mod run;

/// Exit code for malformed input (bad flags, unparseable data).
pub const EXIT_USAGE: i32 = 2;
/// Exit code for a check that ran and failed.
pub const EXIT_CHECK_FAILED: i32 = 1;
