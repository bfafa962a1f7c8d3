fn main() {
    std::process::exit(equising::run_cli());
}
