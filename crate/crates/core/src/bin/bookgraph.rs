fn main() {
    std::process::exit(bookgraph::cli::main());
}
