//! Text front end for the `pkoszul` engine: the input format, run
//! configuration and report rendering.

pub mod config;
pub mod document;
pub mod run;
pub mod schema;

pub use config::{Cli, Command, Format, ModulePart, RunConfig};
pub use document::{parse_input, parse_input_with_char, InputDocument, ParseError};
pub use run::{run, Outcome, EXIT_INPUT, EXIT_OK, EXIT_REFUSAL};

use std::io::Read;

/// Parses arguments, reads the input and runs; the whole CLI minus process exit.
pub fn main_with_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    use clap::Parser;
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    if cli.schema {
        return Outcome { code: EXIT_OK, stdout: schema::SCHEMA.to_string(), stderr: String::new() };
    }
    let Some(cfg) = RunConfig::from_cli(&cli) else {
        return Outcome::input_error("a subcommand is required (see --help)");
    };
    let path = &cfg.command.input().input;
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map(|_| s)
    } else {
        std::fs::read_to_string(path)
    };
    let text = match text {
        Ok(t) => t,
        Err(e) => return Outcome::input_error(format!("{}: {e}", path.display())),
    };
    match parse_input_with_char(&text, cfg.characteristic) {
        Ok(doc) => run(&cfg, &doc),
        Err(e) => Outcome::input_error(format!("{}: {e}", path.display())),
    }
}
