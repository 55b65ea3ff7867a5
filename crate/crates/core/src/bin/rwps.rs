use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use serde_json::{Map, Value};

use rwps::cli::{self, config_with_overrides, exit_code};

/// Exact tables for random walk polynomials and their sieved variants.
#[derive(Parser)]
#[command(name = "rwps", version)]
struct Args {
    /// expand, operator, fourier, characterize, minpoly or tables.
    command: Option<String>,
    /// JSON config; inline flags override its fields.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Family as JSON, e.g. '{"kind":"ultraspherical","alpha":"1/2"}'.
    #[arg(long)]
    family_json: Option<String>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    horizon: Option<usize>,
    /// text, csv, json or latex.
    #[arg(long)]
    format: Option<String>,
    /// full or weakened.
    #[arg(long)]
    mode: Option<String>,
    /// Seed for families of kind "random".
    #[arg(long)]
    seed: Option<u64>,
    /// Write the artifact here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn overrides(args: &Args) -> Result<Map<String, Value>, rwps::Error> {
    let mut map = Map::new();
    if let Some(c) = &args.command {
        map.insert("command".into(), c.clone().into());
    }
    if let Some(f) = &args.family_json {
        let v = serde_json::from_str(f).map_err(|e| rwps::Error::Config {
            path: "family".into(),
            message: e.to_string(),
        })?;
        map.insert("family".into(), v);
    }
    for (key, value) in [
        ("k", args.k),
        ("n", args.n),
        ("m", args.m),
        ("horizon", args.horizon),
    ] {
        if let Some(v) = value {
            map.insert(key.into(), v.into());
        }
    }
    if let Some(f) = &args.format {
        map.insert("format".into(), f.clone().into());
    }
    if let Some(m) = &args.mode {
        map.insert("mode".into(), m.clone().into());
    }
    if let Some(s) = args.seed {
        map.insert("seed".into(), s.into());
    }
    Ok(map)
}

fn main() -> ExitCode {
    let args = Args::parse();
    let result = (|| {
        let base = match &args.config {
            Some(path) => Some(std::fs::read(path).map_err(|e| rwps::Error::Config {
                path: path.display().to_string(),
                message: e.to_string(),
            })?),
            None => None,
        };
        let config = config_with_overrides(base.as_deref(), overrides(&args)?)?;
        let output = cli::run(&config)?;
        match &args.out {
            Some(path) => {
                std::fs::write(path, &output.rendered).map_err(|e| rwps::Error::Config {
                    path: path.display().to_string(),
                    message: e.to_string(),
                })?
            }
            None => print!("{}", output.rendered),
        }
        Ok(output.status)
    })();
    match result {
        Ok(status) => ExitCode::from(status as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e) as u8)
        }
    }
}
