fn main() -> std::process::ExitCode {
    gasketlab::cli::main()
}
