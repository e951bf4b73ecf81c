//! Command-line front end: `.lift` file execution, one-shot queries and the
//! exhaustive verification suite.

pub mod app;
pub mod verify;

pub use app::{dispatch, run_file, Cli, Command, EXIT_INPUT, EXIT_INVARIANT, EXIT_OK};
pub use verify::{verify_paper, Report, SuiteOutcome};
