fn main() {
    std::process::exit(halfspin::cli::run(std::env::args_os()));
}
