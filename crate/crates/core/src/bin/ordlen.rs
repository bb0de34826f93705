fn main() {
    std::process::exit(ordlen::cli::main());
}
