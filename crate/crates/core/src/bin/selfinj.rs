fn main() {
    std::process::exit(selfinj::cli::main_with_args(std::env::args_os()));
}
