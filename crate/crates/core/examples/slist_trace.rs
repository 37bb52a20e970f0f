// Step through the S-list as it processes example (1), word by word.

use std::error::Error;
use std::fmt::Write;

use slist_anaphora::{load_document, Engine, SlistEngine, Trace};

const EXAMPLE1: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/example1.json");

pub fn run_example() -> Result<String, Box<dyn Error>> {
    let doc = load_document(&std::fs::read(EXAMPLE1)?)?;
    let run = SlistEngine::default().run(&doc);
    let mut out = String::new();
    if let Trace::Slist(steps) = &run.trace {
        for s in steps {
            let list: Vec<String> = s
                .slist
                .iter()
                .map(|e| format!("{}_{}", e.entity, e.class))
                .collect();
            writeln!(
                out,
                "{:>3} {:<9} {:?} [{}]",
                s.token_index,
                doc.tokens[s.token_index].surface,
                s.action,
                list.join(", ")
            )?;
        }
    }
    for (anaphor, entity) in run.resolutions() {
        writeln!(out, "{anaphor} -> {entity}")?;
    }
    Ok(out)
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    print!("{}", run_example()?);
    Ok(())
}
