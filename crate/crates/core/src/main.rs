fn main() {
    let (code, out) = circsign::cli::run(std::env::args_os());
    if code == 2 {
        eprintln!("{}", out.trim_end());
    } else {
        println!("{}", out.trim_end());
    }
    std::process::exit(code);
}
