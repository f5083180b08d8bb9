use std::process::ExitCode;

fn main() -> ExitCode {
    lorentz_squeeze::cli::main_with_args(std::env::args_os())
}
