fn main() {
    let code = ultra_urysohn::cli::run(std::env::args_os(), &mut std::io::stdout().lock());
    std::process::exit(code);
}
