use clap::Parser;

use qreservoir::cli::{run_command, RunConfig};

fn main() {
    let config = RunConfig::parse();
    match run_command(&config) {
        Ok(status) => std::process::exit(status),
        Err(err) => {
            eprintln!("error: {err}");
            std::process::exit(1);
        }
    }
}
