fn main() {
    std::process::exit(domenum::cli::entry());
}
