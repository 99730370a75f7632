use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

fn main() -> ExitCode {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let mut err = io::stderr().lock();
    let code = lonechild::cli::run(std::env::args_os(), &mut out, &mut err);
    let code = match out.flush() {
        Ok(()) => code,
        Err(_) => lonechild::cli::EXIT_IO,
    };
    ExitCode::from(code as u8)
}
