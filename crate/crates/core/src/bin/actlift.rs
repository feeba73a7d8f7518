fn main() -> std::process::ExitCode {
    actlift::cli::main_from(std::env::args_os())
}
