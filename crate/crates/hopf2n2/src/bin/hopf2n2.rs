use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(hopf2n2::cli::run_main())
}
