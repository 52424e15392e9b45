use std::io::Write;

fn main() {
    let result = transfinite::cli::dispatch(std::env::args_os());
    print!("{}", result.stdout);
    eprint!("{}", result.stderr);
    std::io::stdout().flush().ok();
    std::process::exit(result.exit_code);
}
