// Clause-level utterances for example (3) and what each one continues from.

use std::error::Error;
use std::fmt::Write;

use slist_anaphora::kameyama::split_utterances_kameyama;
use slist_anaphora::{load_document, BfpEngine, Engine, TieBreak};

const EXAMPLE3: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/example3.json");

pub fn run_example() -> Result<String, Box<dyn Error>> {
    let doc = load_document(&std::fs::read(EXAMPLE3)?)?;
    let split = split_utterances_kameyama(&doc)?;
    let units = split.units(&doc);
    let mut out = String::new();
    for (u, unit) in split.utterances.iter().zip(&units) {
        writeln!(
            out,
            "U{:<2} s{} clauses {:?} level {} {:?} pred {} [{}]",
            u.index,
            u.sentence,
            u.clauses,
            u.level,
            u.access,
            split.predecessors[u.index].map_or("-".into(), |p| format!("U{p}")),
            unit.markables.iter().map(|m| m.0.as_str()).collect::<Vec<_>>().join(" ")
        )?;
    }
    let run = BfpEngine::kameyama(TieBreak::CfRank).run(&doc);
    for (a, e) in run.resolutions() {
        writeln!(out, "{a} -> {e}")?;
    }
    Ok(out)
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    print!("{}", run_example()?);
    Ok(())
}
