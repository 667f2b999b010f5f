fn main() {
    std::process::exit(simplex_cylinders::cli::run(std::env::args()));
}
