fn main() {
    let result = hypercone::cli::run(std::env::args());
    println!("{}", result.to_json());
    std::process::exit(result.exit_code());
}
