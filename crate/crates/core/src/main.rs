fn main() {
    std::process::exit(gsp4_core::cli::main_with_args());
}
