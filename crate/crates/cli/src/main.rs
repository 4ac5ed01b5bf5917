fn main() {
    std::process::exit(partpoly_cli::main_with_args(std::env::args_os()));
}
