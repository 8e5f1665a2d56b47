fn main() -> std::process::ExitCode {
    glnchar::cli::main_with_args(std::env::args_os())
}
