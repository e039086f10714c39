fn main() {
    std::process::exit(ambio_cli::run(std::env::args_os()));
}
