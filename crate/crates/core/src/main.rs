fn main() {
    std::process::exit(mfcover::cli::main_with_args(std::env::args_os()));
}
