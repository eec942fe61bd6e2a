use std::process::ExitCode;

fn main() -> ExitCode {
    wsn_cli::run(std::env::args_os())
}
