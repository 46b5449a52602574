fn main() {
    std::process::exit(kothe::cli::run(std::env::args_os()));
}
