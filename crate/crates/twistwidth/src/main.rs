fn main() {
    std::process::exit(twistwidth::cli::run(std::env::args_os()));
}
