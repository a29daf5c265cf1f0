fn main() {
    std::process::exit(pathdet::cli::run());
}
