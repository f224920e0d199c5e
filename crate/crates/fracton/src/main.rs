use std::process::ExitCode;

fn main() -> ExitCode {
    fracton::cli::run()
}
