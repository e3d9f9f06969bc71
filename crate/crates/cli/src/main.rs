fn main() {
    std::process::exit(metric_clifford_cli::run(std::env::args_os()));
}
