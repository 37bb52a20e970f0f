// A wrong pronoun can drag later ones with it. Forcing the earlier pronouns
// to their gold referents and re-running shows which errors are inherited.

use std::error::Error;
use std::fmt::Write;

use slist_anaphora::{classify_errors, load_document, AmbigMode, Engine, EntityId, Forced, SlistEngine};

const CHAIN: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/chain_error.json");

pub fn run_example() -> Result<String, Box<dyn Error>> {
    let doc = load_document(&std::fs::read(CHAIN)?)?;
    let engine = SlistEngine::default();
    let run = engine.run(&doc);
    let categories = classify_errors(&run.records, &doc, |f| engine.run_forced(&doc, f), AmbigMode::WrongOnly)?;
    let mut out = String::new();
    for (r, c) in run.records.iter().zip(&categories) {
        writeln!(out, "{} -> {} (gold {:?}): {:?}", r.anaphor, r.system, r.gold.as_ref().map(|g| g.0.as_str()), c)?;
    }

    let forced: Forced = [(run.records[0].anaphor.clone(), EntityId::chain("Anna"))].into();
    let again = engine.run_forced(&doc, &forced);
    writeln!(out, "with she_1 forced to Anna: she_2 -> {}", again.records[1].system)?;
    Ok(out)
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    print!("{}", run_example()?);
    Ok(())
}
