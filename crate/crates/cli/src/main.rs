use clap::Parser;

fn main() {
    std::process::exit(proca_lab::cli::run(proca_lab::cli::Cli::parse()));
}
