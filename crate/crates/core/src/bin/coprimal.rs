fn main() {
    std::process::exit(coprimal::cli::run());
}
