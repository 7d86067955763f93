//! CLI front end: argument parsing, module routing, deterministic text or
//! JSON Lines output, and the acceptance suite.

pub mod acceptance;
pub mod args;
pub mod cache;
pub mod commands;
pub mod format;
pub mod valuespec;

use clap::Parser;

use args::{Cli, Command, DEFAULT_DIGITS, MAX_DIGITS, SuiteCommand};

/// Exit codes: 0 success, 1 computational error, 2 usage error.
pub fn run<I, S>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let argv: Vec<String> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 }; // --help/--version exit 0
            return (code, e.render().to_string());
        }
    };

    let digits = match resolve_digits(cli.digits) {
        Ok(d) => d,
        Err(msg) => return (2, format!("error: {msg}\n")),
    };
    let bits = periodlab_core::bits_for_digits(digits);
    let echo = argv[1..].join(" ");

    if let Command::Suite { command: SuiteCommand::Acceptance { only } } = &cli.command {
        return acceptance::run_suite(*only, cli.json);
    }

    let mut ctx = commands::Ctx {
        digits,
        bits,
        cache: cli.cache.as_ref().map(cache::Cache::load),
        echo,
    };
    let start = std::time::Instant::now();
    match commands::dispatch(&cli.command, &mut ctx) {
        Ok(report) => {
            let cache_note = match &mut ctx.cache {
                None => "off".to_string(),
                Some(c) => {
                    let note = format!("hits={} misses={}", c.hits, c.misses);
                    c.save();
                    note
                }
            };
            let out = if cli.json {
                report.render_json(start.elapsed().as_millis(), &cache_note)
            } else {
                report.render_text()
            };
            (0, out)
        }
        Err(e) => (1, format!("error: {}: {e}\n", e.name())),
    }
}

fn resolve_digits(flag: Option<usize>) -> Result<usize, String> {
    let digits = flag
        .or_else(|| {
            std::env::var("PERIODLAB_DIGITS")
                .ok()
                .and_then(|s| s.parse().ok())
        })
        .unwrap_or(DEFAULT_DIGITS);
    if digits == 0 {
        return Err("digits must be >= 1".into());
    }
    if digits > MAX_DIGITS {
        return Err(format!("digits {digits} exceeds the maximum {MAX_DIGITS}"));
    }
    Ok(digits)
}
