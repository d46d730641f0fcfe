fn main() {
    std::process::exit(pinwheel_forge::run::run(std::env::args()));
}
