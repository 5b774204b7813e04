use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use gvpoly_cli::{run, Cli, EXIT_PARSE};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let mut inputs = Vec::with_capacity(cli.options.input.len());
    for path in &cli.options.input {
        match std::fs::read(path) {
            Ok(b) => inputs.push(b),
            Err(e) => {
                eprintln!("gvpoly: cannot read {}: {e}", path.display());
                return ExitCode::from(EXIT_PARSE);
            }
        }
    }
    let report = run(cli.command, &inputs, &cli.options);
    let mut stdout = std::io::stdout().lock();
    if writeln!(stdout, "{}", report.render(cli.options.compact)).is_err() {
        return ExitCode::from(report.exit_code);
    }
    if let Some(err) = report.value().get("error") {
        eprintln!("gvpoly: {}", err["message"].as_str().unwrap_or_default());
    }
    ExitCode::from(report.exit_code)
}
