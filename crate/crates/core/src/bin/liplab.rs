fn main() {
    std::process::exit(liplab::cli::main_with_args(std::env::args_os()));
}
