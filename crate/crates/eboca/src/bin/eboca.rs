fn main() {
    std::process::exit(eboca::cli::run(std::env::args()));
}
