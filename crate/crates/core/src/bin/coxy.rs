fn main() {
    let args: Vec<String> = std::env::args().collect();
    let (code, out) = coxcover::cli::run(&args);
    print!("{out}");
    std::process::exit(code);
}
