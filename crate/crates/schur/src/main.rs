fn main() {
    std::process::exit(schur::cli::run());
}
