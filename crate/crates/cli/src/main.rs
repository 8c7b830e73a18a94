use clap::Parser;
use djc_cli::{run, Cli};

fn main() {
    let code = match run(Cli::parse()) {
        Ok(outcome) => outcome.exit_code(),
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    };
    std::process::exit(code);
}
