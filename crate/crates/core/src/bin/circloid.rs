fn main() {
    std::process::exit(circloid::cli::run());
}
