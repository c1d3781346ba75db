fn main() {
    std::process::exit(qhilbert::cli::run(std::env::args_os()));
}
