// Paragraphs become discourse segments unless they open with a pronoun
// that continues the previous one.

use std::error::Error;
use std::fmt::Write;

use slist_anaphora::{derive_segments, load_document};

fn doc(paragraphs: &[&str]) -> String {
    // one sentence per paragraph; words starting with `*` are feminine pronouns,
    // capitalized words are names
    let mut tokens = Vec::new();
    let mut markables = Vec::new();
    let mut clauses = Vec::new();
    for (p, text) in paragraphs.iter().enumerate() {
        clauses.push(format!(r#"{{"id": {p}, "sent": {p}, "tensed": true, "class": "main"}}"#));
        for (k, w) in text.split_whitespace().enumerate() {
            let i = tokens.len();
            let word = w.trim_start_matches('*');
            tokens.push(format!(
                r#"{{"i": {i}, "w": "{word}", "sent": {p}, "clause": {p}, "para": {p}}}"#
            ));
            let form = if w.starts_with('*') {
                "personal_pronoun"
            } else if word.chars().next().is_some_and(char::is_uppercase) && word != "The" {
                "proper_name"
            } else {
                continue;
            };
            let role = if k == 0 { "subject" } else { "direct_object" };
            markables.push(format!(
                r#"{{"id": "m{i}", "span": [{i}, {i}], "form": "{form}", "agr": {{"p": 3, "n": "sg", "g": "fem"}}, "role": "{role}", "chain": "{}"}}"#,
                if form == "proper_name" { word } else { "Ada" }
            ));
        }
    }
    format!(
        r#"{{"tokens": [{}], "clauses": [{}], "markables": [{}]}}"#,
        tokens.join(","),
        clauses.join(","),
        markables.join(",")
    )
}

pub fn run_example() -> Result<String, Box<dyn Error>> {
    let mut out = String::new();
    let text = [
        "Ada wrote a program .",
        "*She ran it twice .",
        "The machine was loud .",
        "Grace admired *her .",
    ];
    let d = load_document(doc(&text).as_bytes())?;
    for seg in derive_segments(&d) {
        let sentences: Vec<&str> = seg.sentences.clone().map(|s| text[s]).collect();
        writeln!(out, "segment {}: {}", seg.id, sentences.join(" | "))?;
    }
    Ok(out)
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    print!("{}", run_example()?);
    Ok(())
}
