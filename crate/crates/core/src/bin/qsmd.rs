fn main() {
    std::process::exit(qschemoid::cli::run(std::env::args_os()));
}
