// Example (5): two readings tie on RETAIN, so the answer depends on the
// tie-break. The S-list has no such tie.

use std::error::Error;
use std::fmt::Write;

use slist_anaphora::{evaluate, load_document, AmbigMode, BfpEngine, SlistEngine, TieBreak};

const EXAMPLE5: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/example5.json");

pub fn run_example() -> Result<String, Box<dyn Error>> {
    let doc = load_document(&std::fs::read(EXAMPLE5)?)?;
    let mut out = String::new();
    for tie in [TieBreak::CfRank, TieBreak::Recency] {
        for mode in [AmbigMode::WrongOnly, AmbigMode::Strict] {
            let ev = evaluate(&BfpEngine::new(tie), &doc, mode)?;
            let rec = &ev.run.records[0];
            let tied: Vec<String> = rec.tied.iter().map(|e| e.to_string()).collect();
            writeln!(
                out,
                "bfp {tie:<8} {mode:<10} them -> {:<6} tied [{}] error {:?}",
                rec.system,
                tied.join(", "),
                ev.outcomes[0].error
            )?;
        }
    }
    let ev = evaluate(&SlistEngine::default(), &doc, AmbigMode::WrongOnly)?;
    writeln!(out, "slist them -> {} error {:?}", ev.outcomes[0].system, ev.outcomes[0].error)?;
    Ok(out)
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    print!("{}", run_example()?);
    Ok(())
}
