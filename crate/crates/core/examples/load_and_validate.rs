// Load an annotated document and report what the loader derived from it.
// A broken document is rejected with every problem listed.

use std::error::Error;
use std::fmt::Write;

use slist_anaphora::load_document;

const EXAMPLE3: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/example3.json");

pub fn run_example() -> Result<String, Box<dyn Error>> {
    let mut out = String::new();
    let doc = load_document(&std::fs::read(EXAMPLE3)?)?;
    writeln!(
        out,
        "{} tokens, {} sentences, {} paragraphs, {} clauses, {} markables, {} chains",
        doc.tokens.len(),
        doc.sentences.len(),
        doc.paragraphs.len(),
        doc.clauses.len(),
        doc.markables.len(),
        doc.chains.len()
    )?;
    for (chain, members) in doc.chains.iter().filter(|(_, m)| m.len() > 1) {
        let surfaces: Vec<String> = members
            .iter()
            .filter_map(|id| doc.markable(id))
            .map(|m| doc.surface(m))
            .collect();
        writeln!(out, "  {chain}: {}", surfaces.join(" / "))?;
    }

    let broken = br#"{
      "tokens": [{"i": 0, "w": "She", "sent": 0, "clause": 0, "para": 0}],
      "clauses": [{"id": 0, "sent": 0, "tensed": true, "class": "main"}],
      "markables": [{"id": "she", "span": [0, 4], "form": "personal_pronoun",
                     "agr": {"p": 3, "n": "sg", "g": "fem"}, "role": "subject",
                     "anchor": "nowhere"}]
    }"#;
    match load_document(broken) {
        Ok(_) => writeln!(out, "broken document accepted?")?,
        Err(e) => writeln!(out, "rejected: {e}")?,
    }
    Ok(out)
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    print!("{}", run_example()?);
    Ok(())
}
