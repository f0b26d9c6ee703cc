fn main() -> std::process::ExitCode {
    starlattice::cli::main()
}
