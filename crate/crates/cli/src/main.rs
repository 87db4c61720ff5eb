mod cmd;
mod config;
mod out;

use std::process::ExitCode;

use clap::Parser;

use config::RunConfig;

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<fdw_core::Error>() {
        Some(e) if e.is_numerical() => 3,
        _ => 2,
    }
}

fn init_threads() {
    if let Some(n) = std::env::var("FDW_THREADS").ok().and_then(|v| v.trim().parse::<usize>().ok()) {
        if n > 0 {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
    }
}

fn main() -> ExitCode {
    let cfg = match RunConfig::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if cfg.dump_config {
        match serde_json::to_string_pretty(&cfg) {
            Ok(s) => {
                println!("{s}");
                return ExitCode::SUCCESS;
            }
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
        }
    }
    init_threads();
    match cmd::run(&cfg) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_round_trips_through_json() {
        let argv = [
            "fdw",
            "compare",
            "--bulk",
            "leapfrog",
            "--courant",
            "-1/2",
            "--zone",
            "front",
            "--nmax",
            "10000",
            "--format",
            "json",
        ];
        let cfg = RunConfig::try_parse_from(argv).unwrap();
        let text = serde_json::to_string(&cfg).unwrap();
        let back: RunConfig = serde_json::from_str(&text).unwrap();
        assert_eq!(back, cfg);
        assert_eq!(serde_json::to_string(&back).unwrap(), text);
    }
}
