use std::process::ExitCode;

fn main() -> ExitCode {
    eigenprime::cli::main()
}
