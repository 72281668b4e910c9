use clap::Parser;
use symbreak::cli::{run, Cli};

fn main() {
    if let Ok(threads) = std::env::var("SYMBREAK_THREADS") {
        if let Ok(threads) = threads.parse::<usize>() {
            // Ignore failure: the global pool may already be initialized.
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build_global();
        }
    }
    std::process::exit(run(&Cli::parse()));
}
