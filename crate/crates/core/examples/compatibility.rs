// Agreement, binding and sort checks for the pronouns of (1d').

use std::error::Error;
use std::fmt::Write;

use slist_anaphora::compat::{agreement_matches, binding_permits, compatible, CandidateContext};
use slist_anaphora::discourse::referring_expressions_in_order;
use slist_anaphora::entity::{Features, Site};
use slist_anaphora::load_document;

const EXAMPLE1_PRIME: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/example1_prime.json");

pub fn run_example() -> Result<String, Box<dyn Error>> {
    let doc = load_document(&std::fs::read(EXAMPLE1_PRIME)?)?;
    let site = |m: &slist_anaphora::discourse::Markable| Site {
        clause: doc.clause_of(m),
        role: m.role,
    };
    let refs = referring_expressions_in_order(&doc);
    let mut out = String::new();
    for p in refs.iter().filter(|m| m.form.is_pronoun_like()) {
        for c in refs.iter().filter(|c| c.start < p.start && !c.form.is_pronoun_like()) {
            let features = Features {
                agreement: c.agreement,
                sort_tag: c.sort_tag.clone(),
            };
            let ctx = CandidateContext::between(p, site(p), &features, Some(site(c)));
            writeln!(
                out,
                "{:<4} vs {:<14} agree={:<5} binding={:<5} => {}",
                doc.surface(p),
                doc.surface(c),
                agreement_matches(&p.agreement, &c.agreement),
                binding_permits(&ctx),
                if compatible(&ctx) { "ok" } else { "ruled out" }
            )?;
        }
    }
    Ok(out)
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    print!("{}", run_example()?);
    Ok(())
}
