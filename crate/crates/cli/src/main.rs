use clap::Parser;

fn main() {
    let cli = bichroma_cli::args::Cli::parse();
    if let Err(e) = bichroma_cli::execute(cli) {
        eprintln!("error: {e}");
        std::process::exit(e.exit_code());
    }
}
