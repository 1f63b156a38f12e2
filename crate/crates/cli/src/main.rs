fn main() {
    std::process::exit(deglist::run(std::env::args_os()));
}
