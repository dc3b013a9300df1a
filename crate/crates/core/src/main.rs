fn main() {
    std::process::exit(ramsat::cli::run());
}
