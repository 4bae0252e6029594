fn main() {
    std::process::exit(momentkit::cli::run(std::env::args_os()));
}
