use clap::Parser;

fn main() {
    let cli = pcross_cli::commands::Cli::parse();
    std::process::exit(pcross_cli::commands::main_with(cli));
}
