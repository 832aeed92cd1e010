use std::io;
use std::process;

fn main() {
    let stdin = io::stdin();
    let mut stdin = stdin.lock();
    let stdout = io::stdout();
    let mut stdout = stdout.lock();
    let mut stderr = io::stderr();
    let code = fibgray::cli::run(std::env::args_os(), &mut stdin, &mut stdout, &mut stderr);
    process::exit(code);
}
