use std::io::Write;

use clap::Parser;
use wpint::cli::{run, Command};

fn main() {
    let out = run(&Command::parse());
    // a closed pipe (e.g. `| head`) is not an error worth a panic
    if !out.stdout.is_empty() {
        let _ = writeln!(std::io::stdout(), "{}", out.stdout);
    }
    if !out.stderr.is_empty() {
        let _ = writeln!(std::io::stderr(), "{}", out.stderr);
    }
    std::process::exit(out.code);
}
