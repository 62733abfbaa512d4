use clap::Parser;

fn main() {
    std::process::exit(modjl::cli::run(modjl::cli::Cli::parse()));
}
