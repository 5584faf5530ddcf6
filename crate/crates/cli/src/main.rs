fn main() {
    std::process::exit(bqg_cli::run_from(std::env::args()));
}
