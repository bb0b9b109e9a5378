fn main() {
    let (code, out, err) = legfill::cli::run_args(std::env::args_os());
    print!("{out}");
    eprint!("{err}");
    std::process::exit(code);
}
