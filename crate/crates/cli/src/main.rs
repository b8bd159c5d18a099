use std::io::Write;

fn main() {
    let env = std::env::vars().collect();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let code = selfdual_cli::main_with(std::env::args_os(), &env, &mut stdout.lock(), &mut stderr.lock());
    let _ = std::io::stdout().flush();
    std::process::exit(code);
}
