// Familiarity classes assigned to each referring expression of example (3).

use std::error::Error;
use std::fmt::Write;

use slist_anaphora::discourse::referring_expressions_in_order;
use slist_anaphora::slist::{classify_realization, MentionHistory};
use slist_anaphora::{load_document, EntityId};

const EXAMPLE3: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/example3.json");

pub fn run_example() -> Result<String, Box<dyn Error>> {
    let doc = load_document(&std::fs::read(EXAMPLE3)?)?;
    let mut history = MentionHistory::new();
    let mut out = String::new();
    for m in referring_expressions_in_order(&doc) {
        // gold referents stand in for resolution here
        let entity = match &m.chain {
            Some(c) => EntityId::Chain(c.clone()),
            None => EntityId::Fresh(m.id.clone()),
        };
        let class = classify_realization(m, &entity, &history);
        history.record(&m.id, &entity, class.familiarity);
        writeln!(
            out,
            "{:<4} {:<45} {:?} {}",
            class.familiarity.code(),
            doc.surface(m),
            class.familiarity.status_set(),
            class.diagnostic.unwrap_or_default()
        )?;
    }
    Ok(out)
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    print!("{}", run_example()?);
    Ok(())
}
