// Drive the command-line front-end in-process and read its JSON report.

use std::error::Error;
use std::fmt::Write;

use clap::Parser;
use slist_anaphora::cli::{run_cli, RunConfig};

pub fn run_example() -> Result<String, Box<dyn Error>> {
    let config = RunConfig::try_parse_from([
        "slist-anaphora",
        "--algo",
        "bfp-kameyama",
        "--report",
        "structured",
        concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/example3.json"),
    ])?;
    let (mut stdout, mut stderr) = (Vec::new(), Vec::new());
    let status = run_cli(&config, &mut stdout, &mut stderr);
    let report: serde_json::Value = serde_json::from_slice(&stdout)?;
    let mut out = String::new();
    writeln!(out, "exit {status}")?;
    for rec in report["documents"][0]["records"].as_array().into_iter().flatten() {
        writeln!(
            out,
            "{} -> {} {}",
            rec["anaphor"].as_str().unwrap_or(""),
            rec["system"].as_str().unwrap_or(""),
            rec["error"]["category"].as_str().unwrap_or("correct")
        )?;
    }
    writeln!(out, "total {}", report["aggregate"]["total"])?;
    Ok(out)
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    print!("{}", run_example()?);
    Ok(())
}
