use std::process::ExitCode;

use clap::Parser;

use hurwitz_cli::{run, Cli, Env};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => e.exit(),
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let code = match run(&cli, &Env::from_process(), &mut out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e.message);
            e.code
        }
    };
    ExitCode::from(code as u8)
}
