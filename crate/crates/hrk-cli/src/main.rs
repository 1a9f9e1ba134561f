fn main() {
    std::process::exit(hrk_cli::commands::run());
}
