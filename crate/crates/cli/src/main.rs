use clap::Parser;

fn main() {
    let cli = pmh_cli::Cli::parse();
    let code = pmh_cli::run(
        &cli,
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    );
    std::process::exit(code);
}
