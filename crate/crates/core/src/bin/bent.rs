use std::io::Write;

fn main() {
    let (code, report) = bentkit::cli::run(std::env::args_os());
    let out = if code == 2 {
        &mut std::io::stderr() as &mut dyn Write
    } else {
        &mut std::io::stdout()
    };
    let _ = out.write_all(report.as_bytes());
    std::process::exit(code);
}
