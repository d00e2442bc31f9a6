fn main() {
    std::process::exit(pcore_cli::run_cli(std::env::args_os()));
}
