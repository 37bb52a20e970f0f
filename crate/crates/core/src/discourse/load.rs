//! The on-disk document format.
//!
//! One JSON object per file:
//!
//! ```text
//! {
//!   "group": "nyt",                                     (optional)
//!   "tokens":    [{"i", "w", "sent", "clause", "para"}],
//!   "clauses":   [{"id", "sent", "tensed", "class", "parent"}],
//!   "markables": [{"id", "span": [a, b], "form", "agr": {"p", "n", "g"}, "role",
//!                  "chain", "sort", "flags": {"pred", "pleo", "quote"},
//!                  "coord", "anchor", "elaborated_by", "sel_sort"}]
//! }
//! ```
//!
//! Chains are implicit in the markables' `chain` values. Optional extensions:
//! `flags.split` / `flags.event` route gold-side error categories and
//! `info: "I" | "IC"` marks an inferrable.

use std::collections::{BTreeMap, HashMap, HashSet};

use serde::{Deserialize, Serialize};

use super::model::*;
use crate::error::{Error, Result};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    group: Option<String>,
    #[serde(default)]
    tokens: Vec<RawToken>,
    #[serde(default)]
    clauses: Vec<RawClause>,
    #[serde(default)]
    markables: Vec<RawMarkable>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawToken {
    i: usize,
    w: String,
    sent: usize,
    clause: usize,
    para: usize,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawClause {
    id: usize,
    sent: usize,
    tensed: bool,
    class: ClauseClass,
    #[serde(default)]
    parent: Option<usize>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawAgreement {
    p: u8,
    n: Number,
    g: Gender,
}

fn is_false(b: &bool) -> bool {
    !*b
}

#[derive(Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFlags {
    #[serde(default)]
    pred: bool,
    #[serde(default)]
    pleo: bool,
    #[serde(default)]
    quote: bool,
    #[serde(default, skip_serializing_if = "is_false")]
    split: bool,
    #[serde(default, skip_serializing_if = "is_false")]
    event: bool,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMarkable {
    id: String,
    span: [usize; 2],
    form: NpForm,
    agr: RawAgreement,
    role: Role,
    #[serde(default)]
    chain: Option<String>,
    #[serde(default)]
    sort: Option<String>,
    #[serde(default)]
    flags: RawFlags,
    #[serde(default)]
    coord: Option<String>,
    #[serde(default)]
    anchor: Option<String>,
    #[serde(default)]
    elaborated_by: Option<String>,
    #[serde(default)]
    sel_sort: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    info: Option<Inferrable>,
}

/// Parses, links and validates one document.
pub fn load_document(bytes: &[u8]) -> Result<Document> {
    let text = std::str::from_utf8(bytes).map_err(|e| Error::Parse {
        line: 1,
        column: e.valid_up_to() + 1,
        message: "input is not valid UTF-8".into(),
    })?;
    let raw: RawDocument = if text.trim().is_empty() {
        RawDocument {
            group: None,
            tokens: vec![],
            clauses: vec![],
            markables: vec![],
        }
    } else {
        serde_json::from_str(text)?
    };
    build(raw)
}

/// Writes a document back in the input format.
pub fn to_json(doc: &Document) -> String {
    let raw = RawDocument {
        group: doc.group.clone(),
        tokens: doc
            .tokens
            .iter()
            .map(|t| RawToken {
                i: t.index,
                w: t.surface.clone(),
                sent: t.sentence,
                clause: t.clause,
                para: t.paragraph,
            })
            .collect(),
        clauses: doc
            .clauses
            .iter()
            .map(|c| RawClause {
                id: c.id,
                sent: c.sentence,
                tensed: c.tensed,
                class: c.class,
                parent: c.parent,
            })
            .collect(),
        markables: doc
            .markables
            .iter()
            .map(|m| RawMarkable {
                id: m.id.0.clone(),
                span: [m.start, m.end],
                form: m.form,
                agr: RawAgreement {
                    p: m.agreement.person,
                    n: m.agreement.number,
                    g: m.agreement.gender,
                },
                role: m.role,
                chain: m.chain.as_ref().map(|c| c.0.clone()),
                sort: m.sort_tag.clone(),
                flags: RawFlags {
                    pred: m.predicative,
                    pleo: m.pleonastic,
                    quote: m.in_direct_speech,
                    split: m.split_antecedent,
                    event: m.event_reference,
                },
                coord: m.coordination_group.clone(),
                anchor: m.anchor.as_ref().map(|a| a.0.clone()),
                elaborated_by: m.elaborated_by.as_ref().map(|a| a.0.clone()),
                sel_sort: m.selectional_sort.clone(),
                info: m.inferrable,
            })
            .collect(),
    };
    serde_json::to_string_pretty(&raw).expect("document serializes")
}

fn build(raw: RawDocument) -> Result<Document> {
    let mut references = Vec::new();
    let mut violations = Vec::new();

    let tokens: Vec<Token> = raw
        .tokens
        .into_iter()
        .map(|t| Token {
            index: t.i,
            surface: t.w,
            sentence: t.sent,
            clause: t.clause,
            paragraph: t.para,
        })
        .collect();

    for (pos, t) in tokens.iter().enumerate() {
        if t.index != pos {
            violations.push(format!(
                "token at position {pos} has index {} (indices must be dense from 0)",
                t.index
            ));
        }
    }
    check_dense_ids(&tokens, |t| t.sentence, "sentence", &mut violations);
    check_dense_ids(&tokens, |t| t.paragraph, "paragraph", &mut violations);
    for pair in tokens.windows(2) {
        if pair[0].sentence == pair[1].sentence && pair[0].paragraph != pair[1].paragraph {
            violations.push(format!(
                "sentence {} spans paragraphs {} and {}",
                pair[0].sentence, pair[0].paragraph, pair[1].paragraph
            ));
        }
    }

    let sentences = collect_sentences(&tokens);
    let paragraphs = collect_paragraphs(&sentences);

    // clauses
    let clauses: Vec<Clause> = raw
        .clauses
        .into_iter()
        .map(|c| Clause {
            id: c.id,
            sentence: c.sent,
            tensed: c.tensed,
            class: c.class,
            parent: c.parent,
        })
        .collect();
    let mut clause_index = HashMap::new();
    for (i, c) in clauses.iter().enumerate() {
        if clause_index.insert(c.id, i).is_some() {
            violations.push(format!("duplicate clause id {}", c.id));
        }
    }
    for c in &clauses {
        if let Some(p) = c.parent {
            match clause_index.get(&p) {
                None => references.push(format!("clause {} has unknown parent {p}", c.id)),
                Some(&pi) if clauses[pi].sentence != c.sentence => violations.push(format!(
                    "clause {} and its parent {p} lie in different sentences",
                    c.id
                )),
                _ => {}
            }
        } else if !c.tensed || c.class == ClauseClass::Untensed {
            violations.push(format!("untensed clause {} has no parent clause", c.id));
        }
        if c.tensed == (c.class == ClauseClass::Untensed) {
            violations.push(format!(
                "clause {} has tensed = {} but class {:?}",
                c.id, c.tensed, c.class
            ));
        }
    }
    for t in &tokens {
        match clause_index.get(&t.clause) {
            None => references.push(format!("token {} has unknown clause {}", t.index, t.clause)),
            Some(&ci) if clauses[ci].sentence != t.sentence => violations.push(format!(
                "token {} in sentence {} belongs to clause {} of sentence {}",
                t.index, t.sentence, t.clause, clauses[ci].sentence
            )),
            _ => {}
        }
    }
    if references.is_empty() {
        check_clause_tree(&clauses, &clause_index, &tokens, &mut violations);
    }

    // markables
    let mut markables = Vec::with_capacity(raw.markables.len());
    for m in raw.markables {
        markables.push(Markable {
            id: MarkableId(m.id),
            start: m.span[0],
            end: m.span[1],
            form: m.form,
            agreement: Agreement {
                person: m.agr.p,
                number: m.agr.n,
                gender: m.agr.g,
            },
            sort_tag: m.sort,
            role: m.role,
            chain: m.chain.map(ChainId),
            predicative: m.flags.pred,
            pleonastic: m.flags.pleo,
            in_direct_speech: m.flags.quote,
            split_antecedent: m.flags.split,
            event_reference: m.flags.event,
            coordination_group: m.coord,
            anchor: m.anchor.map(MarkableId),
            elaborated_by: m.elaborated_by.map(MarkableId),
            selectional_sort: m.sel_sort,
            inferrable: m.info,
        });
    }
    markables.sort_by_key(|m| m.span_key());

    let mut markable_index = HashMap::new();
    for (i, m) in markables.iter().enumerate() {
        if markable_index.insert(m.id.clone(), i).is_some() {
            violations.push(format!("duplicate markable id `{}`", m.id));
        }
    }
    for m in &markables {
        check_markable(m, &tokens, &markables, &markable_index, &mut references, &mut violations);
    }

    if !references.is_empty() {
        return Err(Error::Reference(references));
    }
    if !violations.is_empty() {
        return Err(Error::Validation(violations));
    }

    let mut chains: BTreeMap<ChainId, Vec<MarkableId>> = BTreeMap::new();
    for m in &markables {
        if let Some(chain) = &m.chain {
            chains.entry(chain.clone()).or_default().push(m.id.clone());
        }
    }

    Ok(Document {
        group: raw.group,
        tokens,
        clauses,
        markables,
        sentences,
        paragraphs,
        chains,
        markable_index,
        clause_index,
    })
}

fn check_dense_ids(
    tokens: &[Token],
    key: impl Fn(&Token) -> usize,
    what: &str,
    violations: &mut Vec<String>,
) {
    let mut expected = 0;
    for (pos, t) in tokens.iter().enumerate() {
        let id = key(t);
        if pos == 0 {
            if id != 0 {
                violations.push(format!("first token must open {what} 0, found {id}"));
            }
        } else if id != expected && id != expected + 1 {
            violations.push(format!(
                "token {pos} jumps from {what} {expected} to {id} ({what} ids must be dense and ordered)"
            ));
        }
        expected = id;
    }
}

fn collect_sentences(tokens: &[Token]) -> Vec<Sentence> {
    let mut out: Vec<Sentence> = Vec::new();
    for t in tokens {
        match out.last_mut() {
            Some(s) if s.id == t.sentence => s.tokens.end = t.index + 1,
            _ => out.push(Sentence {
                id: t.sentence,
                paragraph: t.paragraph,
                tokens: t.index..t.index + 1,
            }),
        }
    }
    out
}

fn collect_paragraphs(sentences: &[Sentence]) -> Vec<Paragraph> {
    let mut out: Vec<Paragraph> = Vec::new();
    for (i, s) in sentences.iter().enumerate() {
        match out.last_mut() {
            Some(p) if p.id == s.paragraph => p.sentences.end = i + 1,
            _ => out.push(Paragraph {
                id: s.paragraph,
                sentences: i..i + 1,
            }),
        }
    }
    out
}

/// Parent links must be acyclic, every clause must own tokens (directly or
/// through descendants), children nest inside their parent's extent and
/// siblings are disjoint.
fn check_clause_tree(
    clauses: &[Clause],
    index: &HashMap<usize, usize>,
    tokens: &[Token],
    violations: &mut Vec<String>,
) {
    for c in clauses {
        let mut seen = HashSet::new();
        let mut cur = c.id;
        while let Some(p) = index.get(&cur).and_then(|&i| clauses[i].parent) {
            if !seen.insert(p) || p == c.id {
                violations.push(format!("clause {} lies on a parent cycle", c.id));
                return;
            }
            cur = p;
        }
    }

    // extent of each clause including descendants
    let mut extent: HashMap<usize, (usize, usize)> = HashMap::new();
    for t in tokens {
        let mut cur = Some(t.clause);
        while let Some(id) = cur {
            let e = extent.entry(id).or_insert((t.index, t.index));
            e.0 = e.0.min(t.index);
            e.1 = e.1.max(t.index);
            cur = index.get(&id).and_then(|&i| clauses[i].parent);
        }
    }
    for c in clauses {
        if !extent.contains_key(&c.id) {
            violations.push(format!("clause {} covers no tokens", c.id));
        }
    }

    let mut children: BTreeMap<Option<usize>, Vec<usize>> = BTreeMap::new();
    for c in clauses {
        let key = c.parent;
        children.entry(key).or_default().push(c.id);
    }
    for (parent, kids) in &children {
        let mut spans: Vec<(usize, usize, usize)> = kids
            .iter()
            .filter_map(|k| extent.get(k).map(|&(a, b)| (a, b, *k)))
            .collect();
        spans.sort();
        for pair in spans.windows(2) {
            if pair[1].0 <= pair[0].1 {
                violations.push(format!(
                    "clauses {} and {} overlap without nesting",
                    pair[0].2, pair[1].2
                ));
            }
        }
        if let Some(p) = parent {
            if let Some(&(pa, pb)) = extent.get(p) {
                for &(a, b, k) in &spans {
                    if a < pa || b > pb {
                        violations.push(format!("clause {k} extends outside its parent {p}"));
                    }
                }
            }
        }
    }
}

fn check_markable(
    m: &Markable,
    tokens: &[Token],
    markables: &[Markable],
    index: &HashMap<MarkableId, usize>,
    references: &mut Vec<String>,
    violations: &mut Vec<String>,
) {
    if m.start > m.end || m.end >= tokens.len() {
        violations.push(format!(
            "markable `{}` has span [{}, {}] outside the {} tokens",
            m.id,
            m.start,
            m.end,
            tokens.len()
        ));
        return;
    }
    if tokens[m.start].sentence != tokens[m.end].sentence {
        violations.push(format!(
            "markable `{}` span [{}, {}] crosses a sentence boundary",
            m.id, m.start, m.end
        ));
    }
    if !(1..=3).contains(&m.agreement.person) {
        violations.push(format!(
            "markable `{}` has person {} (must be 1, 2 or 3)",
            m.id, m.agreement.person
        ));
    }
    if m.pleonastic && m.form != NpForm::PersonalPronoun {
        violations.push(format!(
            "markable `{}` is pleonastic but not a personal pronoun",
            m.id
        ));
    }
    if m.chain.is_none() && !m.pleonastic && !m.predicative {
        violations.push(format!("markable `{}` has no chain", m.id));
    }
    if let Some(anchor) = &m.anchor {
        match index.get(anchor) {
            None => references.push(format!("markable `{}` has unknown anchor `{anchor}`", m.id)),
            Some(&ai) => {
                let a = &markables[ai];
                let earlier = a.span_key() < m.span_key();
                let containing = a.start <= m.start && a.end >= m.end && a.id != m.id;
                if !earlier && !containing {
                    violations.push(format!(
                        "anchor `{anchor}` of markable `{}` is neither earlier nor containing",
                        m.id
                    ));
                }
            }
        }
    }
    if let Some(el) = &m.elaborated_by {
        if !index.contains_key(el) {
            references.push(format!(
                "markable `{}` is elaborated by unknown markable `{el}`",
                m.id
            ));
        }
    }
}
