//! Presentation files and the subcommands of the `kbgb` binary.

pub mod commands;
pub mod presentation;

pub use commands::{cmd_complete, cmd_equal, cmd_iso_check, cmd_lockstep, cmd_nf, CliError, Options, Outcome, Status};
pub use presentation::{
    parse_polynomial, parse_presentation, ParseError, ParseErrorKind, Presentation, PresentationMode, Relations,
};
