use std::process::ExitCode;

fn main() -> ExitCode {
    let (code, text) = hopfbrace_cli::run_args(std::env::args_os());
    if !text.is_empty() {
        if code == 0 || code == 1 {
            println!("{}", text);
        } else {
            eprintln!("{}", text);
        }
    }
    ExitCode::from(code as u8)
}
