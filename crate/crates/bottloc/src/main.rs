use std::io::{self, Write};
use std::process::ExitCode;

use bottloc::cli::{run, Cli};
use clap::Parser;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let code = match run(cli, &mut out) {
        Ok(outcome) => outcome.code(),
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e}");
            2
        }
    };
    let _ = out.flush();
    ExitCode::from(code)
}
