fn main() {
    let (code, out) = hopfforge::cli::run(std::env::args_os());
    if out.starts_with("error:") {
        eprint!("{out}");
    } else {
        print!("{out}");
    }
    std::process::exit(code);
}
