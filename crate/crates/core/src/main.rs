use std::io::Read;
use std::process::ExitCode;

fn main() -> ExitCode {
    let out = switchkit::cli::run_with(std::env::args_os(), || {
        let mut input = String::new();
        std::io::stdin().lock().read_to_string(&mut input)?;
        Ok(input)
    });
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    ExitCode::from(out.code as u8)
}
