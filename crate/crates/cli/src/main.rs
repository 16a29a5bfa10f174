use clap::Parser;

use cominuscule_cli::args::Cli;

fn main() {
    let cli = Cli::parse();
    std::process::exit(cominuscule_cli::run(&cli));
}
