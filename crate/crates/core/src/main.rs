fn main() {
    std::process::exit(dinfty::cli::run(std::env::args_os()));
}
