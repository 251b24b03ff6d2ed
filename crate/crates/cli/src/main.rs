fn main() {
    std::process::exit(synthcap_cli::run());
}
