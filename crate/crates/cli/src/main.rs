fn main() {
    std::process::exit(ccuc_cli::run(std::env::args_os()));
}
