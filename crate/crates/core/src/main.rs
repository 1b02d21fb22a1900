fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (code, out) = chevalley::cli::run_command(&args);
    if code == 2 {
        eprint!("{out}");
    } else {
        print!("{out}");
    }
    std::process::exit(code);
}
