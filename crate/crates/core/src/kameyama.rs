//! Clause-level utterances for the centering baseline.
//!
//! Every tensed clause is an utterance; untensed clauses belong to the
//! utterance of their nearest tensed ancestor. Reported speech is embedded
//! and closed to the level above it; complements and relative clauses are
//! embedded but stay visible to it, ranked after its own centers. All other
//! tensed clauses chain on their level.

use std::collections::HashMap;

use serde::Serialize;

use crate::centering::UtteranceUnit;
use crate::discourse::{referring_expressions_in_order, ClauseClass, Document};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Access {
    Sequential,
    EmbeddedAccessible,
    EmbeddedInaccessible,
}

impl Access {
    pub fn of(class: ClauseClass) -> Access {
        match class {
            ClauseClass::ReportedSpeech => Access::EmbeddedInaccessible,
            ClauseClass::NonReportComplement | ClauseClass::Relative => Access::EmbeddedAccessible,
            ClauseClass::Main | ClauseClass::OtherTensed | ClauseClass::Untensed => {
                Access::Sequential
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClauseUtterance {
    pub index: usize,
    pub sentence: usize,
    /// The tensed clause first, then the untensed clauses merged into it.
    pub clauses: Vec<usize>,
    pub level: usize,
    pub access: Access,
    pub superordinate: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KameyamaSplit {
    pub utterances: Vec<ClauseUtterance>,
    /// For each utterance, the utterance whose Cf serves as its previous Cf.
    pub predecessors: Vec<Option<usize>>,
    #[serde(skip)]
    clause_utterance: HashMap<usize, usize>,
}

impl KameyamaSplit {
    pub fn utterance_of_clause(&self, clause: usize) -> Option<usize> {
        self.clause_utterance.get(&clause).copied()
    }

    /// The plan consumed by the centering engine.
    pub fn units(&self, doc: &Document) -> Vec<UtteranceUnit> {
        let mut units: Vec<UtteranceUnit> = self
            .utterances
            .iter()
            .map(|u| UtteranceUnit {
                index: u.index,
                sentence: u.sentence,
                clauses: u.clauses.clone(),
                markables: Vec::new(),
                predecessor: self.predecessors[u.index],
                superordinate: u.superordinate,
                accessible: u.access == Access::EmbeddedAccessible,
            })
            .collect();
        for m in referring_expressions_in_order(doc) {
            if let Some(i) = self.utterance_of_clause(doc.clause_of(m)) {
                units[i].markables.push(m.id.clone());
            }
        }
        units
    }
}

/// The tensed clause that `clause` is processed with.
fn tensed_host(doc: &Document, clause: usize) -> Result<usize> {
    let mut current = clause;
    loop {
        let c = doc
            .clause(current)
            .ok_or_else(|| Error::ClauseAnnotation(format!("unknown clause {current}")))?;
        if c.tensed {
            return Ok(current);
        }
        current = c.parent.ok_or_else(|| {
            Error::ClauseAnnotation(format!(
                "untensed clause {current} has no tensed ancestor"
            ))
        })?;
    }
}

/// Splits every sentence into clause utterances and links each to the
/// utterance it continues from.
pub fn split_utterances_kameyama(doc: &Document) -> Result<KameyamaSplit> {
    let mut utterances: Vec<ClauseUtterance> = Vec::new();
    let mut predecessors: Vec<Option<usize>> = Vec::new();
    let mut clause_utterance: HashMap<usize, usize> = HashMap::new();
    let mut last: Vec<Option<usize>> = Vec::new();

    for sent in &doc.sentences {
        let mut order: Vec<usize> = Vec::new();
        for t in &doc.tokens[sent.tokens.clone()] {
            if !order.contains(&t.clause) {
                order.push(t.clause);
            }
        }
        for &cid in &order {
            let clause = doc
                .clause(cid)
                .ok_or_else(|| Error::ClauseAnnotation(format!("unknown clause {cid}")))?;
            if !clause.tensed {
                continue;
            }
            let host = match clause.parent {
                Some(p) => Some(tensed_host(doc, p)?),
                None => None,
            };
            let host_utt = host.and_then(|h| clause_utterance.get(&h).copied());
            let access = if host_utt.is_some() {
                Access::of(clause.class)
            } else {
                Access::Sequential
            };
            let (level, superordinate) = match (access, host_utt) {
                (Access::Sequential, Some(h)) => (utterances[h].level, utterances[h].superordinate),
                (Access::Sequential, None) => (0, None),
                (_, Some(h)) => (utterances[h].level + 1, Some(h)),
                (_, None) => unreachable!("embedded access requires a host"),
            };
            let at_level = last.get(level).copied().flatten();
            let predecessor = match access {
                Access::Sequential => at_level,
                Access::EmbeddedAccessible => at_level
                    .filter(|&q| utterances[q].superordinate == superordinate)
                    .or(superordinate),
                Access::EmbeddedInaccessible => at_level.filter(|&q| {
                    utterances[q].superordinate == superordinate
                        && utterances[q].access == Access::EmbeddedInaccessible
                }),
            };
            let index = utterances.len();
            utterances.push(ClauseUtterance {
                index,
                sentence: sent.id,
                clauses: vec![cid],
                level,
                access,
                superordinate,
            });
            predecessors.push(predecessor);
            clause_utterance.insert(cid, index);
            last.resize(level + 1, None);
            last[level] = Some(index);
        }
        for &cid in &order {
            if clause_utterance.contains_key(&cid) {
                continue;
            }
            let host = tensed_host(doc, cid)?;
            let index = *clause_utterance.get(&host).ok_or_else(|| {
                Error::ClauseAnnotation(format!(
                    "clause {cid} is attached to clause {host} outside its sentence"
                ))
            })?;
            utterances[index].clauses.push(cid);
            clause_utterance.insert(cid, index);
        }
    }

    Ok(KameyamaSplit {
        utterances,
        predecessors,
        clause_utterance,
    })
}
