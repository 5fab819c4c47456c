fn main() {
    std::process::exit(ftk::cli::main());
}
