use std::process::ExitCode;

fn main() -> ExitCode {
    let (code, output) = lietower::cli::cli(std::env::args_os());
    if code == 0 {
        println!("{output}");
    } else {
        eprintln!("{output}");
    }
    ExitCode::from(code as u8)
}
