fn main() {
    std::process::exit(avecond::cli::main_with_args(std::env::args_os()));
}
