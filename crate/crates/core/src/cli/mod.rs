//! Command implementations behind the `ghzcert` binary, and the state-file format.

mod commands;
mod format;
pub mod statefile;

pub use commands::{
    cmd_certify, cmd_make_state, cmd_scan_angles, cmd_scan_noise, cmd_trace_distance, load_state, CliError,
    CommandOutput, StateKind, EXIT_ERROR, EXIT_LOCAL, EXIT_OK, TOOL_NAME, TOOL_VERSION,
};
pub use format::{exact, sig};
pub use statefile::{parse_state, write_state, StateFileError};
