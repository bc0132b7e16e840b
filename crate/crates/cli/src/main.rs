fn main() {
    std::process::exit(catg_cli::cli_main(std::env::args_os()));
}
