fn main() {
    std::process::exit(wgalg::cli::run());
}
