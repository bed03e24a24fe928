fn main() {
    std::process::exit(ncsym::cli::main_entry());
}
