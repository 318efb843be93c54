fn main() {
    std::process::exit(cordial::cli::main());
}
