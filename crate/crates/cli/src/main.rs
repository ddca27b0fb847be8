use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    if let Err(msg) = kerovkit_cli::configure_threads() {
        eprintln!("error: {msg}");
        return ExitCode::from(kerovkit_cli::EXIT_USAGE as u8);
    }
    let out = kerovkit_cli::run(std::env::args_os());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    let _ = std::io::stdout().flush();
    ExitCode::from(out.code as u8)
}
