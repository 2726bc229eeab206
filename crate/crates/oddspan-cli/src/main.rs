use std::io::Write;

fn main() {
    if let Ok(value) = std::env::var(oddspan_cli::THREADS_ENV) {
        match value.parse::<usize>() {
            Ok(threads) if threads > 0 => {
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(threads)
                    .build_global();
            }
            _ => {
                eprintln!("ignoring {}={value:?}: expected a positive integer", oddspan_cli::THREADS_ENV);
            }
        }
    }
    let argv: Vec<String> = std::env::args().collect();
    let stdin = std::io::stdin();
    let mut lock = stdin.lock();
    let mut stdout = std::io::stdout();
    let mut stderr = std::io::stderr();
    let code = oddspan_cli::cli_dispatch(&argv, &mut lock, &mut stdout, &mut stderr);
    let _ = stdout.flush();
    std::process::exit(code);
}
