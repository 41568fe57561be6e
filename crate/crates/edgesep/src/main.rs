fn main() {
    std::process::exit(edgesep::cli::run(std::env::args_os()));
}
