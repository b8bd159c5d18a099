//! Front end for `selfdual-core`: argument and config handling, the
//! persistent decomposition cache, and report rendering.

pub mod args;
pub mod cache;
pub mod config;
pub mod error;
pub mod render;
pub mod report;
pub mod run;
pub mod weight;

use std::collections::HashMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::Parser;

use selfdual_core::exec::with_workers;
use selfdual_core::{Engine, ExecMode};

pub use error::{exit, CliError};
pub use report::Report;
pub use weight::{parse_weight, parse_weight_list};

fn diagnostic(err: &mut dyn Write, code: &str, message: &str) {
    let _ = writeln!(err, "selfdual: error[{code}]: {message}");
}

/// Runs a full invocation. `env` stands in for the process environment.
pub fn main_with<I, T>(argv: I, env: &HashMap<String, String>, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match args::Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    exit::OK
                }
                _ => {
                    let text = e.to_string();
                    let first = text
                        .lines()
                        .next()
                        .unwrap_or("bad arguments")
                        .trim_start_matches("error: ");
                    diagnostic(err, "parse", first);
                    let _ = write!(err, "{}", text.lines().skip(1).collect::<Vec<_>>().join("\n"));
                    let _ = writeln!(err);
                    exit::PARSE
                }
            };
        }
    };
    let config = cli
        .global
        .config
        .clone()
        .or_else(|| env.get(&format!("{}CONFIG", config::ENV_PREFIX)).map(PathBuf::from));
    let settings = match config::Settings::resolve(cli.global.layer(), env, config.as_deref()) {
        Ok(s) => s,
        Err(e) => {
            diagnostic(err, e.code(), &e.to_string());
            return e.exit_code();
        }
    };

    let engine = Engine::with_capacity(settings.cache_capacity.max(1)).with_mode(ExecMode::Parallel);
    if let Some(path) = &settings.cache {
        if let Err(warning) = cache::load(&engine, path) {
            let _ = writeln!(err, "selfdual: warning[cache]: {warning}");
        }
    }
    let result = with_workers(settings.workers, || run::run(&cli.verb, &settings, &engine));
    if let Some(path) = &settings.cache {
        if let Err(e) = cache::save(&engine, path) {
            let _ = writeln!(err, "selfdual: warning[cache]: cannot write {}: {e}", path.display());
        }
    }
    match result {
        Ok(report) => {
            let _ = out.write_all(render::render(&report, settings.format).as_bytes());
            if report.body.truncated() {
                diagnostic(
                    err,
                    "resource_limit",
                    &format!("scan stopped after {} triples (raise --limit)", settings.limit),
                );
                exit::RESOURCE_LIMIT
            } else {
                exit::OK
            }
        }
        Err(e) => {
            diagnostic(err, e.code(), &e.to_string());
            e.exit_code()
        }
    }
}
