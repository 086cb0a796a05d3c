fn main() {
    std::process::exit(chipchain::cli::run(std::env::args_os()));
}
