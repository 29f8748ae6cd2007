fn main() {
    std::process::exit(schur9::cli::run(std::env::args_os()));
}
