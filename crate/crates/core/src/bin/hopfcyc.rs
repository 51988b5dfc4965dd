fn main() {
    std::process::exit(hopfcyc::cli::main_with_args(std::env::args_os()));
}
