use clap::Parser;
use homcount::cli::{execute, Cli};

fn main() {
    std::process::exit(execute(&Cli::parse()));
}
