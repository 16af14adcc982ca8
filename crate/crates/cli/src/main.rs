fn main() {
    std::process::exit(maxcut_cli::run_cli());
}
