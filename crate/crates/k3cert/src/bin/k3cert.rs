fn main() {
    std::process::exit(k3cert::cli::run(std::env::args_os()));
}
