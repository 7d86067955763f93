fn main() {
    let (code, output) = periodlab_cli::run(std::env::args());
    if code == 0 {
        print!("{output}");
    } else {
        eprint!("{output}");
    }
    std::process::exit(code);
}
