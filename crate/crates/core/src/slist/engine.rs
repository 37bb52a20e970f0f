use std::collections::{HashMap, HashSet};

use serde::Serialize;

use super::familiarity::{classify_realization, Familiarity, MentionHistory};
use super::list::{Realization, SList, DEFAULT_MAX_LEN};
use crate::compat::{compatible, CandidateContext};
use crate::discourse::{
    derive_segments, referring_expressions_in_order, Agreement, ChainId, Document, Gender,
    Markable, MarkableId, Number, Segment,
};
use crate::entity::{EntityId, Features, Site};
use crate::run::{Algorithm, Engine, Forced, ResolutionRecord, RunResult, Trace};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TraceAction {
    Insert,
    Resolve,
    Purge,
    Reset,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceEntry {
    pub entity: String,
    pub class: Familiarity,
    pub surface: String,
}

/// The visible S-list after one update.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub token_index: usize,
    pub action: TraceAction,
    pub slist: Vec<TraceEntry>,
}

impl TraceStep {
    fn snapshot(token_index: usize, action: TraceAction, list: &SList) -> Self {
        TraceStep {
            token_index,
            action,
            slist: list
                .items()
                .iter()
                .map(|r| TraceEntry {
                    entity: r.entity.to_string(),
                    class: r.familiarity,
                    surface: r.surface.clone(),
                })
                .collect(),
        }
    }
}

/// The S-list resolver.
#[derive(Debug, Clone, Copy)]
pub struct SlistEngine {
    pub max_len: usize,
}

impl Default for SlistEngine {
    fn default() -> Self {
        SlistEngine {
            max_len: DEFAULT_MAX_LEN,
        }
    }
}

impl SlistEngine {
    pub fn new(max_len: usize) -> Self {
        SlistEngine { max_len }
    }
}

impl Engine for SlistEngine {
    fn algorithm(&self) -> Algorithm {
        Algorithm::Slist
    }

    fn run_forced(&self, doc: &Document, forced: &Forced) -> RunResult {
        let segments = derive_segments(doc);
        run_slist(doc, &segments, self.max_len, forced)
    }
}

fn site_of(doc: &Document, m: &Markable) -> Site {
    Site {
        clause: doc.clause_of(m),
        role: m.role,
    }
}

fn features_of(m: &Markable) -> Features {
    Features {
        agreement: m.agreement,
        sort_tag: m.sort_tag.clone(),
    }
}

/// Word-by-word processing with utterance = sentence. The list is emptied at
/// every segment start. Pronoun-like expressions are resolved against the
/// visible list (falling back to the states left by earlier utterances of the
/// segment); everything else takes its entity from the gold chains.
pub fn run_slist(doc: &Document, segments: &[Segment], max_len: usize, forced: &Forced) -> RunResult {
    let mut records = Vec::new();
    let mut trace = Vec::new();
    let mut diagnostics = Vec::new();
    let mut history = MentionHistory::new();
    let mut list = SList::new(max_len);

    let refs = referring_expressions_in_order(doc);
    let groups = coordination_groups(&refs);
    let mut elaborations: HashMap<&MarkableId, Vec<&Markable>> = HashMap::new();
    for m in &refs {
        if let Some(el) = &m.elaborated_by {
            elaborations.entry(el).or_default().push(m);
        }
    }

    for seg in segments {
        if seg.sentences.is_empty() {
            continue;
        }
        list.reset(seg.sentences.start);
        trace.push(TraceStep::snapshot(
            doc.sentences[seg.sentences.start].tokens.start,
            TraceAction::Reset,
            &list,
        ));
        let mut states: Vec<SList> = Vec::new();

        for sent in seg.sentences.clone() {
            let mut realized: HashSet<EntityId> = HashSet::new();
            let mut group_seen: HashMap<&str, usize> = HashMap::new();

            for m in refs.iter().copied().filter(|m| doc.sentence_of(m) == sent) {
                let site = site_of(doc, m);
                let entity = if m.form.is_pronoun_like() {
                    let (entity, depth) = match forced.get(&m.id) {
                        Some(e) => (e.clone(), 0),
                        None => resolve_with_fallback(&list, &states, m, site)
                            .unwrap_or_else(|| (EntityId::Fresh(m.id.clone()), 0)),
                    };
                    trace.push(TraceStep::snapshot(m.start, TraceAction::Resolve, &list));
                    records.push(ResolutionRecord {
                        anaphor: m.id.clone(),
                        system: entity.clone(),
                        gold: m.chain.clone(),
                        algorithm: Algorithm::Slist,
                        ambiguous: false,
                        tied: Vec::new(),
                        fallback_depth: depth,
                        segment: seg.id,
                    });
                    entity
                } else {
                    let chain = m.chain.clone().expect("validated: referring markable has a chain");
                    EntityId::Chain(chain)
                };

                let class = classify_realization(m, &entity, &history);
                diagnostics.extend(class.diagnostic);
                list.insert(Realization {
                    entity: entity.clone(),
                    utt: sent,
                    pos: m.start,
                    familiarity: class.familiarity,
                    surface: doc.surface(m),
                    features: features_of(m),
                    site: Some(site),
                    markable: Some(m.id.clone()),
                });
                history.record(&m.id, &entity, class.familiarity);
                realized.insert(entity);
                trace.push(TraceStep::snapshot(m.start, TraceAction::Insert, &list));

                // a name elaborated by this phrase is evoked from here on
                for host in elaborations.get(&m.id).into_iter().flatten() {
                    if let Some(host_entity) = history.entity_of(&host.id).cloned() {
                        if history.last_class(&host_entity) != Some(Familiarity::Evoked) {
                            list.reclassify(&host_entity, Familiarity::Evoked, m.start);
                            history.set_class(&host_entity, Familiarity::Evoked);
                            trace.push(TraceStep::snapshot(m.end, TraceAction::Insert, &list));
                        }
                    }
                }

                if let Some(group) = m.coordination_group.as_deref() {
                    let seen = group_seen.entry(group).or_insert(0);
                    *seen += 1;
                    let members = &groups[group];
                    if *seen == members.len() {
                        let set = set_realization(doc, group, members, sent, &history);
                        history.set_class(&set.entity, set.familiarity);
                        realized.insert(set.entity.clone());
                        list.insert(set);
                        trace.push(TraceStep::snapshot(m.end, TraceAction::Insert, &list));
                    }
                }
            }

            list.end_of_utterance(&realized);
            trace.push(TraceStep::snapshot(
                doc.sentences[sent].tokens.end - 1,
                TraceAction::Purge,
                &list,
            ));
            states.push(list.clone());
        }
    }

    RunResult {
        algorithm: Algorithm::Slist,
        records,
        trace: Trace::Slist(trace),
        diagnostics,
    }
}

/// Tests the visible list, then the lists left by the utterances before the
/// previous one, most recent first.
fn resolve_with_fallback(
    list: &SList,
    states: &[SList],
    anaphor: &Markable,
    site: Site,
) -> Option<(EntityId, usize)> {
    let test = |r: &Realization| {
        compatible(&CandidateContext::between(anaphor, site, &r.features, r.site))
    };
    if let Some(r) = list.resolve(test) {
        return Some((r.entity.clone(), 0));
    }
    let older = states.len().saturating_sub(1);
    states[..older]
        .iter()
        .rev()
        .enumerate()
        .find_map(|(k, state)| state.resolve(test).map(|r| (r.entity.clone(), k + 1)))
}

fn coordination_groups<'a>(refs: &[&'a Markable]) -> HashMap<&'a str, Vec<&'a Markable>> {
    let mut groups: HashMap<&str, Vec<&Markable>> = HashMap::new();
    for m in refs {
        if let Some(g) = m.coordination_group.as_deref() {
            groups.entry(g).or_default().push(m);
        }
    }
    groups
}

/// The plural entity collecting a coordination, ranked at its first member.
fn set_realization(
    doc: &Document,
    group: &str,
    members: &[&Markable],
    utt: usize,
    history: &MentionHistory,
) -> Realization {
    let entity = EntityId::Chain(ChainId(group.to_owned()));
    let first = members[0];
    let last = members[members.len() - 1];
    let gender = if members.iter().all(|m| m.agreement.gender == first.agreement.gender) {
        first.agreement.gender
    } else {
        Gender::Unknown
    };
    let familiarity = if history.has_mention(&entity) {
        Familiarity::Evoked
    } else {
        members
            .iter()
            .filter_map(|m| history.entity_of(&m.id).and_then(|e| history.last_class(e)))
            .min_by_key(|f| f.status_set())
            .unwrap_or(Familiarity::BrandNew)
    };
    Realization {
        entity,
        utt,
        pos: first.start,
        familiarity,
        surface: doc.text(first.start, last.end),
        features: Features {
            agreement: Agreement::third(Number::Pl, gender),
            sort_tag: None,
        },
        site: Some(site_of(doc, first)),
        markable: None,
    }
}
