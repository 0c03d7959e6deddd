use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

fn main() -> ExitCode {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let code = zeta_cli::run(std::env::args_os(), &mut out, &mut io::stderr());
    match out.flush() {
        Err(e) if e.kind() != io::ErrorKind::BrokenPipe => {
            eprintln!("catzeta: {e}");
            ExitCode::from(zeta_cli::EXIT_FAILURE)
        }
        _ => ExitCode::from(code),
    }
}
