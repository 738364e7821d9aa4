use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let out = cubic_surd_cli::run_cli(std::env::args_os());
    // A closed pipe (e.g. `| head`) is not an error worth reporting.
    if !out.stdout.is_empty() {
        let _ = writeln!(std::io::stdout().lock(), "{}", out.stdout.trim_end());
    }
    if !out.stderr.is_empty() {
        let _ = writeln!(std::io::stderr().lock(), "{}", out.stderr.trim_end());
    }
    ExitCode::from(out.code as u8)
}
