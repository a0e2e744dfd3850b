fn main() {
    std::process::exit(sig6::cli::run());
}
