fn main() {
    std::process::exit(superplactic::cli::run(std::env::args_os()));
}
