fn main() {
    std::process::exit(kbg::cli::main_from_env());
}
