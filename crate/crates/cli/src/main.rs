use clap::Parser;
use frax_cli::args::Cli;

fn main() {
    let cli = Cli::parse();
    if let Some(n) = std::env::var("FRAX_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("FRAX_THREADS ignored: {e}");
        }
    }
    if let Err(e) = frax_cli::run(&cli) {
        eprintln!("frax: {e}");
        std::process::exit(e.exit_code());
    }
}
