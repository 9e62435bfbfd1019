use clap::Parser;

fn main() {
    std::process::exit(brauer_chen::cli::run(brauer_chen::cli::Cli::parse()));
}
