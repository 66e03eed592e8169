fn main() {
    std::process::exit(gfcpp::cli::run());
}
