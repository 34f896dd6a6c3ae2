fn main() {
    let argv: Vec<String> = std::env::args().collect();
    std::process::exit(hamsplit_cli::run(&argv));
}
