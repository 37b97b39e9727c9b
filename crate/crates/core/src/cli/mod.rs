//! Command implementations behind the `drg-uniform` binary.

mod commands;
mod config;
mod suites;

pub use commands::{
    cmd_analyze, cmd_certify, cmd_decompose, cmd_family, cmd_flatten, load_graph, summarize, to_json, Analysis,
    CertifyOutput, DecomposeOutput, FamilySidecar, ModuleSummary, Output,
};
pub use config::Config;
pub use suites::{run_suite, SuiteCheck, SuiteReport, SUITES};

use crate::error::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_OTHER: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_MISMATCH: i32 = 4;

/// Exit code for an error: parse failures 2, budget overruns 3, anything else 1.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } | Error::Json(_) => EXIT_PARSE,
        Error::BudgetExceeded { .. } => EXIT_BUDGET,
        _ => EXIT_OTHER,
    }
}
