use std::io::Write;

fn main() {
    let outcome = brauer_type::cli::run(std::env::args_os());
    // usage errors go to stderr; a closed pipe is not an error
    let _ = if outcome.code == 2 {
        writeln!(std::io::stderr(), "{}", outcome.output)
    } else {
        writeln!(std::io::stdout(), "{}", outcome.output)
    };
    std::process::exit(outcome.code);
}
