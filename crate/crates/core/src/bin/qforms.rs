use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let outcome = quaternary_forms::cli::run(std::env::args_os());
    if !outcome.stderr.is_empty() {
        eprint!("{}", outcome.stderr);
    }
    let mut stdout = std::io::stdout().lock();
    if stdout.write_all(outcome.stdout.as_bytes()).is_err() {
        return ExitCode::from(1);
    }
    ExitCode::from(outcome.status as u8)
}
