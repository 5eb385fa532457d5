use std::io;
use std::process::ExitCode;

use seqspace::cli::{run, BACKEND_ENV};

fn main() -> ExitCode {
    let env_backend = std::env::var(BACKEND_ENV).ok();
    let code = run(
        std::env::args_os(),
        env_backend.as_deref(),
        &mut io::stdin().lock(),
        &mut io::stdout().lock(),
        &mut io::stderr().lock(),
    );
    ExitCode::from(code as u8)
}
