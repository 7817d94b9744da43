use std::io::Write;

fn main() {
    let seed = std::env::var("COMPOLY_SEED").ok();
    let out = compoly_cli::run_command(std::env::args_os(), seed.as_deref());
    std::io::stdout().write_all(out.stdout.as_bytes()).ok();
    std::io::stderr().write_all(out.stderr.as_bytes()).ok();
    std::process::exit(out.code);
}
