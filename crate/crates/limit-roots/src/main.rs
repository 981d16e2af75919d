fn main() {
    std::process::exit(limit_roots::cli::run_cli(std::env::args()));
}
