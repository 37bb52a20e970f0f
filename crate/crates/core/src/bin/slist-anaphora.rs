fn main() {
    std::process::exit(slist_anaphora::cli::main_with_args(std::env::args_os()));
}
