use std::fs;
use std::io::{self, Write};
use std::process::ExitCode;

use anyhow::Context;
use clap::Parser;
use schreier_cli::{run, ExperimentConfig};

fn emit(cfg: &ExperimentConfig, text: &str) -> anyhow::Result<()> {
    match &cfg.out {
        Some(path) => fs::write(path, text).with_context(|| format!("--out {}", path.display())),
        None => match writeln!(io::stdout().lock(), "{text}") {
            Err(e) if e.kind() == io::ErrorKind::BrokenPipe => Ok(()),
            other => Ok(other?),
        },
    }
}

fn main() -> ExitCode {
    let cfg = ExperimentConfig::parse();
    let outcome = run(&cfg).and_then(|report| {
        emit(&cfg, &report.render()?)?;
        Ok(report.pass)
    });
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
