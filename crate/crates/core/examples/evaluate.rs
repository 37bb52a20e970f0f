// Score all three engines over the bundled fixtures, grouped by source.

use std::collections::BTreeMap;
use std::error::Error;

use slist_anaphora::cli::{expand_inputs, load_path};
use slist_anaphora::eval::render_table;
use slist_anaphora::{evaluate, AmbigMode, BfpEngine, Engine, ScoreTable, SlistEngine, TieBreak};

pub fn run_example() -> Result<String, Box<dyn Error>> {
    let dir = std::path::PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures"));
    let docs = expand_inputs(&[dir])
        .iter()
        .map(|p| load_path(p))
        .collect::<Result<Vec<_>, _>>()?;
    let engines: [Box<dyn Engine>; 3] = [
        Box::new(SlistEngine::default()),
        Box::new(BfpEngine::new(TieBreak::CfRank)),
        Box::new(BfpEngine::kameyama(TieBreak::CfRank)),
    ];
    let mut out = String::new();
    for engine in &engines {
        let mut groups: BTreeMap<String, ScoreTable> = BTreeMap::new();
        for doc in &docs {
            let ev = evaluate(engine.as_ref(), doc, AmbigMode::WrongOnly)?;
            *groups.entry(doc.group.clone().unwrap_or_default()).or_default() += ev.table;
        }
        out.push_str(&render_table(engine.algorithm().name(), &groups));
        out.push('\n');
    }
    Ok(out)
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    print!("{}", run_example()?);
    Ok(())
}
