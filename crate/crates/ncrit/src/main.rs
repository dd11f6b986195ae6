fn main() {
    std::process::exit(ncrit::cli::main_entry());
}
