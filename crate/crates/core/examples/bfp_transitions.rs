// Centering over examples (1) and (1'): Cf, Cb, Cp and the transition of
// every utterance.

use std::error::Error;
use std::fmt::Write;

use slist_anaphora::{load_document, BfpEngine, Engine, TieBreak, Trace};

pub fn run_example() -> Result<String, Box<dyn Error>> {
    let mut out = String::new();
    for name in ["example1", "example1_prime"] {
        let path = format!("{}/fixtures/{name}.json", env!("CARGO_MANIFEST_DIR"));
        let doc = load_document(&std::fs::read(path)?)?;
        let run = BfpEngine::new(TieBreak::CfRank).run(&doc);
        writeln!(out, "{name}")?;
        let Trace::Centering(utts) = &run.trace else { continue };
        for u in utts {
            writeln!(
                out,
                "  U{} Cf=[{}] Cb={} Cp={} {}",
                u.utt,
                u.cf.join(", "),
                u.cb.as_deref().unwrap_or("-"),
                u.cp.as_deref().unwrap_or("-"),
                u.transition.map_or("-".into(), |t| t.to_string())
            )?;
        }
        for (a, e) in run.resolutions() {
            writeln!(out, "  {a} -> {e}")?;
        }
    }
    Ok(out)
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    print!("{}", run_example()?);
    Ok(())
}
