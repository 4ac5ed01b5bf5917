//! The `partpoly` command line.

pub mod config;
pub mod run;
pub mod witness;

use std::ffi::OsString;

pub use config::{parse_args, CommandKind, Format, ParseError, RunConfig};
pub use run::execute;
pub use witness::{Failure, Witness};

/// Parses, runs, reports, and returns the process exit code.
pub fn main_with_args<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString>,
{
    let cfg = match parse_args(argv) {
        Ok(cfg) => cfg,
        Err(ParseError::Clap(e)) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
        Err(e) => {
            eprintln!("{e}");
            return e.exit_code();
        }
    };
    match execute(&cfg) {
        Ok(()) => 0,
        Err(f) => {
            match &f {
                Failure::Assertion(w) => eprintln!("{}", w.to_json()),
                Failure::Usage(m) => eprintln!("error: {m}"),
            }
            f.exit_code()
        }
    }
}
