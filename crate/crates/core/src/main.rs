fn main() {
    std::process::exit(hyperdeg::cli::run());
}
