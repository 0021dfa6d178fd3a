fn main() {
    std::process::exit(kualg::cli::run());
}
