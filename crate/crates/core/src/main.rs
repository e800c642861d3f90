fn main() {
    std::process::exit(quiverforge::cli::run(std::env::args_os()));
}
