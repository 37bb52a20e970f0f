#![allow(dead_code)]

use std::path::PathBuf;

use slist_anaphora::slist::{TraceAction, TraceStep};
use slist_anaphora::{load_document, Document, RunResult, Trace};

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(format!("{name}.json"))
}

pub fn fixture(name: &str) -> Document {
    let bytes = std::fs::read(fixture_path(name)).expect("fixture readable");
    load_document(&bytes).expect("fixture valid")
}

pub const FIXTURES: [&str; 7] = [
    "example1",
    "example1_prime",
    "example2",
    "example2_prime",
    "example3",
    "example5",
    "chain_error",
];

pub fn slist_steps(run: &RunResult) -> &[TraceStep] {
    match &run.trace {
        Trace::Slist(steps) => steps,
        Trace::Centering(_) => panic!("not an S-list trace"),
    }
}

/// Which trace step shows a displayed state.
#[derive(Debug, Clone, Copy)]
pub enum At {
    /// The last step at or before this token.
    Upto(usize),
    /// The first insertion at exactly this token.
    FirstInsert(usize),
}

pub type State = &'static [(&'static str, &'static str)];

pub fn state_at(steps: &[TraceStep], at: At) -> Vec<(String, String)> {
    let step = match at {
        At::Upto(t) => steps.iter().rev().find(|s| s.token_index <= t),
        At::FirstInsert(t) => steps
            .iter()
            .find(|s| s.token_index == t && s.action == TraceAction::Insert),
    }
    .unwrap_or_else(|| panic!("no trace step for {at:?}"));
    step.slist
        .iter()
        .map(|e| (e.entity.clone(), e.class.code().to_owned()))
        .collect()
}

/// Every displayed state that differs from `expected`, as readable lines.
pub fn state_mismatches(steps: &[TraceStep], expected: &[(At, State)]) -> Vec<String> {
    let mut out = Vec::new();
    for (at, want) in expected {
        let got = state_at(steps, *at);
        let want: Vec<(String, String)> = want
            .iter()
            .map(|(e, c)| ((*e).to_owned(), (*c).to_owned()))
            .collect();
        if got != want {
            out.push(format!("{at:?}: expected {want:?}, got {got:?}"));
        }
    }
    out
}

pub const EXAMPLE1: &[(At, State)] = &[
    (At::Upto(4), &[("Brennan", "U"), ("Alfa Romeo", "BN")]),
    (At::Upto(10), &[("Brennan", "E")]),
    (At::Upto(11), &[("Friedman", "U"), ("Brennan", "E")]),
    (At::Upto(16), &[("Friedman", "U"), ("Brennan", "E")]),
    (At::Upto(22), &[("Friedman", "E"), ("Laguna Seca", "U")]),
];

pub const EXAMPLE1_PRIME: &[(At, State)] = &[
    (At::Upto(16), &[("Friedman", "U"), ("Brennan", "E")]),
    (At::Upto(17), &[("Friedman", "E"), ("Brennan", "E")]),
    (At::Upto(21), &[("Friedman", "E"), ("Brennan", "E")]),
];

pub const EXAMPLE2: &[(At, State)] = &[
    (At::Upto(4), &[("Brennan", "U"), ("Alfa Romeo", "BN")]),
    (At::Upto(10), &[("Brennan", "E")]),
    (At::Upto(13), &[("Brennan", "E"), ("Driver", "BN")]),
    (At::Upto(18), &[("Brennan", "E"), ("Driver", "BN")]),
    (At::Upto(24), &[("Brennan", "E"), ("Laguna Seca", "U")]),
];

pub const EXAMPLE2_PRIME: &[(At, State)] = &[
    (At::Upto(19), &[("Brennan", "E"), ("Driver", "BN")]),
    (At::Upto(23), &[("Brennan", "E"), ("Driver", "E")]),
];

pub const EXAMPLE3: &[(At, State)] = &[
    (At::Upto(13), &[("Judge", "BN")]),
    (At::Upto(17), &[("Curtis", "E"), ("Judge", "BN")]),
    (At::Upto(22), &[("Curtis", "E"), ("Judge", "E")]),
    (At::Upto(26), &[("Curtis", "E"), ("Judge", "E"), ("Request", "BN")]),
    (
        At::Upto(28),
        &[("Curtis", "E"), ("Judge", "E"), ("Request", "BN"), ("Prosecutors", "BN")],
    ),
    (
        At::Upto(30),
        &[("Curtis", "E"), ("Judge", "E"), ("Request", "BN"), ("Prosecutors", "BN")],
    ),
    (
        At::Upto(34),
        &[
            ("Curtis", "E"),
            ("Judge", "E"),
            ("Request", "BN"),
            ("Prosecutors", "BN"),
            ("Year", "BN"),
        ],
    ),
    (
        At::FirstInsert(38),
        &[
            ("Curtis", "E"),
            ("Judge", "E"),
            ("Request", "BN"),
            ("Prosecutors", "BN"),
            ("Year", "BN"),
        ],
    ),
    (
        At::Upto(39),
        &[
            ("Curtis", "E"),
            ("Judge", "E"),
            ("Condition", "BNA"),
            ("Request", "BN"),
            ("Prosecutors", "BN"),
        ],
    ),
    (
        At::Upto(41),
        &[
            ("Curtis", "E"),
            ("Judge", "E"),
            ("Condition", "BNA"),
            ("Request", "BN"),
            ("Prosecutors", "BN"),
        ],
    ),
    (
        At::Upto(71),
        &[
            ("Curtis", "E"),
            ("CS Court", "U"),
            ("Judge", "E"),
            ("Condition", "BNA"),
            ("Authorities", "BN"),
        ],
    ),
    (
        At::Upto(72),
        &[
            ("Curtis", "E"),
            ("CS Court", "U"),
            ("Judge", "E"),
            ("Condition", "BNA"),
            ("Authorities", "BN"),
        ],
    ),
    (
        At::Upto(90),
        &[
            ("Smirga", "E"),
            ("Case", "E"),
            ("Curtis", "E"),
            ("CS Court", "U"),
            ("Judge", "E"),
        ],
    ),
    (
        At::Upto(106),
        &[
            ("Smirga", "E"),
            ("Case", "E"),
            ("Reports", "E"),
            ("Curtis", "E"),
            ("Doubts", "BN"),
        ],
    ),
];

pub const RESOLUTIONS1: &[(&str, &str)] = &[("she_b", "Brennan"), ("her_c", "Brennan"), ("she_d", "Friedman")];
pub const RESOLUTIONS1_PRIME: &[(&str, &str)] = &[("she_d2", "Friedman"), ("her_d2", "Brennan")];
pub const RESOLUTIONS2: &[(&str, &str)] = &[("she_d", "Brennan")];
pub const RESOLUTIONS2_PRIME: &[(&str, &str)] = &[("she_d2", "Brennan"), ("her_d2", "Driver")];
pub const RESOLUTIONS3: &[(&str, &str)] = &[
    ("gap_a", "Judge"),
    ("he_a", "Curtis"),
    ("his_a", "Curtis"),
    ("him_b", "Curtis"),
    ("he_c", "Smirga"),
];

pub fn resolution_mismatches(run: &RunResult, expected: &[(&str, &str)]) -> Vec<String> {
    expected
        .iter()
        .filter_map(|(anaphor, entity)| {
            let got = run.record(anaphor).map(|r| r.system.to_string());
            (got.as_deref() != Some(*entity))
                .then(|| format!("{anaphor}: expected {entity}, got {got:?}"))
        })
        .collect()
}

/// Builds a document from a compact notation: whitespace-separated tokens,
/// `.` ends a sentence (one main clause each), `||` starts a paragraph, and
/// `Word{form,gender,chain,role}` marks a one-token markable.
///
/// form: name, pro, poss, def, indef. gender: m, f, n, pl. role: s, o, x.
pub fn mini(text: &str) -> Document {
    let json = mini_json(text);
    load_document(json.to_string().as_bytes()).expect("mini document valid")
}

pub fn mini_json(text: &str) -> serde_json::Value {
    use serde_json::json;
    let mut tokens = Vec::new();
    let mut clauses = Vec::new();
    let mut markables = Vec::new();
    let (mut sent, mut para) = (0usize, 0usize);
    let mut open = false;
    for raw in text.split_whitespace() {
        if raw == "||" {
            if open {
                sent += 1;
                open = false;
            }
            para += 1;
            continue;
        }
        if !open {
            clauses.push(json!({"id": sent, "sent": sent, "tensed": true, "class": "main"}));
            open = true;
        }
        let i = tokens.len();
        let (word, markup) = match raw.split_once('{') {
            Some((w, rest)) => (w, Some(rest.trim_end_matches('}'))),
            None => (raw, None),
        };
        tokens.push(json!({"i": i, "w": word, "sent": sent, "clause": sent, "para": para}));
        if let Some(markup) = markup {
            let f: Vec<&str> = markup.split(',').collect();
            let form = match f[0] {
                "name" => "proper_name",
                "pro" => "personal_pronoun",
                "poss" => "possessive_pronoun",
                "def" => "definite_np",
                "indef" => "indefinite_np",
                other => panic!("unknown form {other}"),
            };
            let (n, g) = match f[1] {
                "m" => ("sg", "masc"),
                "f" => ("sg", "fem"),
                "n" => ("sg", "neut"),
                "pl" => ("pl", "unknown"),
                other => panic!("unknown gender {other}"),
            };
            let role = match f[3] {
                "s" => "subject",
                "o" => "direct_object",
                _ => "other",
            };
            markables.push(json!({
                "id": format!("{}_{i}", word.to_lowercase()),
                "span": [i, i],
                "form": form,
                "agr": {"p": 3, "n": n, "g": g},
                "role": role,
                "chain": f[2],
            }));
        }
        if word == "." {
            sent += 1;
            open = false;
        }
    }
    json!({"tokens": tokens, "clauses": clauses, "markables": markables})
}

pub fn engines() -> Vec<Box<dyn slist_anaphora::Engine>> {
    use slist_anaphora::{BfpEngine, SlistEngine, TieBreak};
    vec![
        Box::new(SlistEngine::default()),
        Box::new(BfpEngine::new(TieBreak::CfRank)),
        Box::new(BfpEngine::kameyama(TieBreak::CfRank)),
    ]
}

/// Replaces the referent of every `step`-th record with a fresh entity.
pub fn inject_errors(run: &mut RunResult, step: usize) {
    use slist_anaphora::EntityId;
    for r in run.records.iter_mut().step_by(step.max(1)) {
        r.system = EntityId::Fresh(r.anaphor.clone());
    }
}

pub mod gen {
    use proptest::prelude::*;
    use slist_anaphora::discourse::{Agreement, Gender, Number};
    use slist_anaphora::entity::Features;
    use slist_anaphora::slist::{Familiarity, Realization};
    use slist_anaphora::EntityId;

    pub fn real(entity: usize, f: Familiarity, utt: usize, pos: usize) -> Realization {
        Realization {
            entity: EntityId::chain(&format!("E{entity}")),
            utt,
            pos,
            familiarity: f,
            surface: format!("e{entity}"),
            features: Features {
                agreement: Agreement::third(Number::Sg, Gender::Unknown),
                sort_tag: None,
            },
            site: None,
            markable: None,
        }
    }

    pub fn familiarity() -> impl Strategy<Value = Familiarity> {
        prop::sample::select(Familiarity::ALL.to_vec())
    }

    pub fn realization(entity: usize) -> impl Strategy<Value = Realization> {
        (familiarity(), 0..4usize, 0..40usize).prop_map(move |(f, u, p)| real(entity, f, u, p))
    }

    pub fn sorted_oracle(rs: &[Realization]) -> Vec<Realization> {
        let mut v = rs.to_vec();
        v.sort_by_key(|r| r.rank_key());
        v
    }
}
