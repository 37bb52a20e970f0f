// How the cap on the visible S-list changes example (3).

use std::error::Error;
use std::fmt::Write;

use slist_anaphora::{evaluate, load_document, AmbigMode, SlistEngine};

const EXAMPLE3: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/example3.json");

pub fn run_example() -> Result<String, Box<dyn Error>> {
    let doc = load_document(&std::fs::read(EXAMPLE3)?)?;
    let mut out = String::new();
    for cap in [1, 2, 3, 5, 8] {
        let ev = evaluate(&SlistEngine::new(cap), &doc, AmbigMode::WrongOnly)?;
        let answers: Vec<String> = ev
            .outcomes
            .iter()
            .map(|o| format!("{}={}", o.anaphor, o.system))
            .collect();
        writeln!(out, "max {cap}: {}/{} correct  {}", ev.table.correct, ev.table.total, answers.join(" "))?;
    }
    Ok(out)
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    print!("{}", run_example()?);
    Ok(())
}
