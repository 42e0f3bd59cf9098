use clap::Parser;

use partcount::cli::{self, Cli, EXIT_USAGE};

fn main() {
    // PARTCOUNT_THREADS caps the parallelism of table rows and the outer
    // divisor / part-count sums. Absent means the rayon default.
    if let Ok(raw) = std::env::var("PARTCOUNT_THREADS") {
        match raw.parse::<usize>() {
            Ok(threads) if threads > 0 => {
                rayon::ThreadPoolBuilder::new()
                    .num_threads(threads)
                    .build_global()
                    .expect("thread pool is configured before any rayon use");
            }
            _ => {
                eprintln!("partcount: PARTCOUNT_THREADS must be a positive integer, got `{raw}`");
                std::process::exit(EXIT_USAGE);
            }
        }
    }
    let cli = Cli::parse();
    std::process::exit(cli::run(cli));
}
