//! Commands behind the `coideal` binary. Every command returns its report
//! as a string so output can be compared byte for byte.

mod commands;
mod config;
pub mod suites;

pub use commands::{cmd_classify, cmd_ls, cmd_roots, cmd_strata, cmd_verify, cmd_weyl};
pub use config::{parse_cartan, CliError, Format, RunConfig, Selector};
