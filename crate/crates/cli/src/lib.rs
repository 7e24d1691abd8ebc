//! Command implementations behind the `cm2` binary. Every command produces a
//! [`ReportEnvelope`]; the binary only parses arguments and prints.

pub mod commands;
pub mod report;
pub mod scan;

pub use commands::{
    cmd_analyze, cmd_charpoly, cmd_charpoly_counts, cmd_field, cmd_lemma2, cmd_oracle, OracleMode,
};
pub use report::{exit, ErrorInfo, Outcome, ReportEnvelope, Status};
pub use scan::{
    cmd_scan_oracle, cmd_scan_theorem, oracle_sweep, theorem_grid, CurveSet, GridParams,
    GridSummary, OracleSummary,
};
