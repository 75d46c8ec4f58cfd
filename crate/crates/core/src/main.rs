fn main() {
    std::process::exit(holey_aztec::cli::run(std::env::args_os()));
}
