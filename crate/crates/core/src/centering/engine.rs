use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use super::readings::{
    candidate_lists, evaluate_reading, filter_readings, generate_from, product_size, rank_readings,
    Candidate, CfEntry, Prev, Reading, Source, TieBreak,
};
use super::transition::Transition;
use crate::compat::{compatible, CandidateContext};
use crate::discourse::{
    derive_segments, referring_expressions_in_order, segment_of, ClauseClass, Document, Markable,
    MarkableId, Segment,
};
use crate::entity::{EntityId, Site};
use crate::error::Result;
use crate::kameyama::split_utterances_kameyama;
use crate::run::{Algorithm, Engine, Forced, ResolutionRecord, RunResult, Trace};

/// Readings beyond this many are not enumerated; pronouns are then resolved
/// one at a time.
pub const MAX_READINGS: usize = 100_000;

/// One utterance as laid out by a splitter: which markables it holds and
/// whose Cf serves as its previous Cf.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UtteranceUnit {
    pub index: usize,
    pub sentence: usize,
    pub clauses: Vec<usize>,
    pub markables: Vec<MarkableId>,
    pub predecessor: Option<usize>,
    /// Set for embedded utterances.
    pub superordinate: Option<usize>,
    /// Embedded, and visible to its superordinate level.
    pub accessible: bool,
}

/// One utterance per sentence; coordinated main clauses form one utterance
/// each, together with the clauses under them.
pub fn split_utterances_bfp(doc: &Document) -> Vec<UtteranceUnit> {
    let refs = referring_expressions_in_order(doc);
    let mut units: Vec<UtteranceUnit> = Vec::new();
    for sent in &doc.sentences {
        let mut clauses: Vec<usize> = Vec::new();
        for t in &doc.tokens[sent.tokens.clone()] {
            if !clauses.contains(&t.clause) {
                clauses.push(t.clause);
            }
        }
        let mains: Vec<usize> = clauses
            .iter()
            .copied()
            .filter(|&c| {
                doc.clause(c)
                    .is_some_and(|cl| cl.class == ClauseClass::Main && cl.parent.is_none())
            })
            .collect();
        let base = units.len();
        let count = mains.len().max(1);
        for k in 0..count {
            units.push(UtteranceUnit {
                index: base + k,
                sentence: sent.id,
                clauses: Vec::new(),
                markables: Vec::new(),
                predecessor: (base + k).checked_sub(1),
                superordinate: None,
                accessible: false,
            });
        }
        let unit_of_clause = |c: usize| {
            let root = doc.root_clause(c);
            base + mains.iter().position(|&m| m == root).unwrap_or(0)
        };
        for &c in &clauses {
            units[unit_of_clause(c)].clauses.push(c);
        }
        for m in refs.iter().filter(|m| doc.sentence_of(m) == sent.id) {
            units[unit_of_clause(doc.clause_of(m))].markables.push(m.id.clone());
        }
    }
    units
}

/// One surviving reading as recorded in the trace.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReadingSummary {
    pub assignments: BTreeMap<String, String>,
    pub cb: Option<String>,
    pub transition: Option<Transition>,
}

/// The centers of one utterance under the chosen reading.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UtteranceTrace {
    pub utt: usize,
    pub sentence: usize,
    pub markables: Vec<String>,
    pub cf: Vec<String>,
    pub cb: Option<String>,
    pub cp: Option<String>,
    pub transition: Option<Transition>,
    pub ambiguous: bool,
    pub assignments: BTreeMap<String, String>,
    pub readings: Vec<ReadingSummary>,
}

struct Done {
    cf: Vec<CfEntry>,
    cb: Option<EntityId>,
}

/// The BFP resolver, over sentence utterances or clause utterances.
#[derive(Debug, Clone, Copy, Default)]
pub struct BfpEngine {
    pub kameyama: bool,
    pub tie_break: TieBreak,
}

impl BfpEngine {
    pub fn new(tie_break: TieBreak) -> Self {
        BfpEngine {
            kameyama: false,
            tie_break,
        }
    }

    pub fn kameyama(tie_break: TieBreak) -> Self {
        BfpEngine {
            kameyama: true,
            tie_break,
        }
    }

    /// The utterance plan this engine runs on.
    pub fn plan(&self, doc: &Document) -> Result<Vec<UtteranceUnit>> {
        if self.kameyama {
            Ok(split_utterances_kameyama(doc)?.units(doc))
        } else {
            Ok(split_utterances_bfp(doc))
        }
    }

    pub fn try_run_forced(&self, doc: &Document, forced: &Forced) -> Result<RunResult> {
        let units = self.plan(doc)?;
        let segments = derive_segments(doc);
        Ok(run_bfp(doc, &units, &segments, self.tie_break, forced, self.algorithm()))
    }
}

impl Engine for BfpEngine {
    fn algorithm(&self) -> Algorithm {
        if self.kameyama {
            Algorithm::BfpKameyama
        } else {
            Algorithm::Bfp
        }
    }

    /// Panics on clause annotation the splitter rejects; loaded documents
    /// are validated against it.
    fn run_forced(&self, doc: &Document, forced: &Forced) -> RunResult {
        self.try_run_forced(doc, forced)
            .expect("clause annotation validated on load")
    }
}

fn site_of(doc: &Document, m: &Markable) -> Site {
    Site {
        clause: doc.clause_of(m),
        role: m.role,
    }
}

/// Cf(pred), followed by the Cf of pred's accessible embedded utterances
/// that precede `current`.
fn context_cf(units: &[UtteranceUnit], done: &[Done], pred: usize, current: usize) -> Vec<CfEntry> {
    let mut cf = done[pred].cf.clone();
    for u in &units[pred + 1..current] {
        if u.accessible && u.superordinate == Some(pred) {
            for e in &done[u.index].cf {
                if !cf.iter().any(|c| c.entity == e.entity) {
                    cf.push(e.clone());
                }
            }
        }
    }
    cf
}

fn first_compatible(p: &Markable, site: Site, cf: &[CfEntry]) -> Option<CfEntry> {
    cf.iter()
        .find(|e| compatible(&CandidateContext::between(p, site, &e.features, Some(e.site))))
        .cloned()
}

/// Runs generate, filter and rank over every utterance of `units`.
///
/// The first utterance of a segment has no previous Cf: its pronouns are
/// resolved left to right against the earlier markables of the utterance.
/// A pronoun with no compatible candidate searches the Cf of the utterances
/// before the previous one, walking the predecessor chain.
pub fn run_bfp(
    doc: &Document,
    units: &[UtteranceUnit],
    segments: &[Segment],
    tie: TieBreak,
    forced: &Forced,
    algorithm: Algorithm,
) -> RunResult {
    let mut records = Vec::new();
    let mut trace = Vec::new();
    let mut diagnostics = Vec::new();
    let mut done: Vec<Done> = Vec::with_capacity(units.len());
    let mut earlier: HashMap<MarkableId, EntityId> = HashMap::new();

    for unit in units {
        let seg = segment_of(segments, unit.sentence);
        let same_segment = |i: usize| segment_of(segments, units[i].sentence) == seg;
        let pred = unit.predecessor.filter(|&p| same_segment(p));
        let u: Vec<&Markable> = unit.markables.iter().filter_map(|id| doc.markable(id)).collect();
        let pronouns: Vec<&Markable> = u.iter().copied().filter(|m| m.form.is_pronoun_like()).collect();

        let prev_cf = pred.map(|p| context_cf(units, &done, p, unit.index));
        let prev = pred.map(|p| Prev {
            cf: prev_cf.as_deref().unwrap_or(&[]),
            cb: done[p].cb.as_ref(),
        });

        let mut depths: HashMap<MarkableId, usize> = HashMap::new();
        let mut readings_out: Vec<Reading>;
        let chosen: Reading;
        let mut ambiguous = false;
        let mut tied: Vec<usize> = Vec::new();

        let mut lists = if pred.is_some() {
            candidate_lists(doc, &u, prev)
        } else {
            candidate_lists(doc, &u, None)
        };
        for (p, list) in pronouns.iter().zip(lists.iter_mut()) {
            if let Some(e) = forced.get(&p.id) {
                *list = vec![Candidate::fixed(e.clone(), p)];
                continue;
            }
            let site = site_of(doc, p);
            list.retain(|c| compatible(&CandidateContext::between(p, site, &c.features, c.site)));
            if pred.is_none() {
                list.truncate(1);
            }
            if list.is_empty() {
                let (cand, depth) = fallback(units, &done, pred, &same_segment, p, site);
                depths.insert(p.id.clone(), depth);
                *list = vec![cand];
            }
        }

        if pred.is_none() {
            let assignments = pronouns.iter().map(|p| p.id.clone()).zip(lists.iter().map(|l| l[0].clone())).collect();
            chosen = evaluate_reading(doc, &u, None, assignments, &earlier);
            readings_out = vec![chosen.clone()];
        } else if product_size(&lists) > MAX_READINGS {
            diagnostics.push(format!(
                "utterance {}: {} readings exceed the limit; pronouns resolved one at a time",
                unit.index,
                product_size(&lists)
            ));
            chosen = independent(doc, &u, prev, &pronouns, &lists, &earlier);
            readings_out = vec![chosen.clone()];
        } else {
            let all = generate_from(doc, &u, prev, &lists, &earlier);
            readings_out = filter_readings(doc, &u, prev, all, &earlier);
            if readings_out.is_empty() {
                diagnostics.push(format!(
                    "utterance {}: every reading violates a constraint; pronouns resolved one at a time",
                    unit.index
                ));
                chosen = independent(doc, &u, prev, &pronouns, &lists, &earlier);
                readings_out = vec![chosen.clone()];
            } else {
                let prev_len = prev.map_or(0, |p| p.cf.len());
                let ranked = rank_readings(&readings_out, &u, prev_len, tie).expect("nonempty");
                ambiguous = ranked.ambiguous;
                tied = ranked.ties.clone();
                chosen = readings_out[ranked.best].clone();
            }
        }

        for (id, cand) in &chosen.assignments {
            let m = doc.markable(id).expect("utterance markable");
            let alternatives: Vec<EntityId> = if ambiguous {
                let mut alts: Vec<EntityId> = Vec::new();
                for &i in &tied {
                    if let Some(e) = readings_out[i].entity_of(id) {
                        if !alts.contains(e) {
                            alts.push(e.clone());
                        }
                    }
                }
                alts
            } else {
                Vec::new()
            };
            let depth = match cand.source {
                Source::Fallback(k) => k,
                _ => depths.get(id).copied().unwrap_or(0),
            };
            records.push(ResolutionRecord {
                anaphor: id.clone(),
                system: cand.entity.clone(),
                gold: m.chain.clone(),
                algorithm,
                ambiguous: alternatives.len() > 1,
                tied: if alternatives.len() > 1 { alternatives } else { Vec::new() },
                fallback_depth: depth,
                segment: seg,
            });
            earlier.insert(id.clone(), cand.entity.clone());
        }

        trace.push(UtteranceTrace {
            utt: unit.index,
            sentence: unit.sentence,
            markables: unit.markables.iter().map(|m| m.0.clone()).collect(),
            cf: chosen.cf.iter().map(|e| e.entity.to_string()).collect(),
            cb: chosen.cb.as_ref().map(|e| e.to_string()),
            cp: chosen.cp().map(|e| e.to_string()),
            transition: chosen.transition,
            ambiguous,
            assignments: chosen.assignment_map(),
            readings: readings_out
                .iter()
                .map(|r| ReadingSummary {
                    assignments: r.assignment_map(),
                    cb: r.cb.as_ref().map(|e| e.to_string()),
                    transition: r.transition,
                })
                .collect(),
        });
        done.push(Done {
            cf: chosen.cf,
            cb: chosen.cb,
        });
    }

    RunResult {
        algorithm,
        records,
        trace: Trace::Centering(trace),
        diagnostics,
    }
}

/// Cf(U_{i-2}), Cf(U_{i-3}), ... along the predecessor chain within the
/// segment; a fresh entity when nothing is compatible.
fn fallback(
    units: &[UtteranceUnit],
    done: &[Done],
    pred: Option<usize>,
    same_segment: &dyn Fn(usize) -> bool,
    p: &Markable,
    site: Site,
) -> (Candidate, usize) {
    let mut depth = 0;
    let mut at = pred.and_then(|q| units[q].predecessor).filter(|&q| same_segment(q));
    while let Some(q) = at {
        depth += 1;
        if let Some(e) = first_compatible(p, site, &done[q].cf) {
            return (
                Candidate {
                    entity: e.entity,
                    features: e.features,
                    site: Some(e.site),
                    pos: e.pos,
                    source: Source::Fallback(depth),
                },
                depth,
            );
        }
        at = units[q].predecessor.filter(|&r| same_segment(r));
    }
    (Candidate::fixed(EntityId::Fresh(p.id.clone()), p), 0)
}

/// Each pronoun takes its first candidate, ignoring joint constraints.
fn independent(
    doc: &Document,
    u: &[&Markable],
    prev: Option<Prev<'_>>,
    pronouns: &[&Markable],
    lists: &[Vec<Candidate>],
    earlier: &HashMap<MarkableId, EntityId>,
) -> Reading {
    let assignments = pronouns
        .iter()
        .map(|p| p.id.clone())
        .zip(lists.iter().map(|l| l[0].clone()))
        .collect();
    evaluate_reading(doc, u, prev, assignments, earlier)
}
