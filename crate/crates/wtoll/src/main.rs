use std::process::ExitCode;

fn main() -> ExitCode {
    wtoll::cli::run(std::env::args_os())
}
