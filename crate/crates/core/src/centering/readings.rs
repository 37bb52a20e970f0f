use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::transition::{classify_transition, Transition};
use crate::compat::{co_argument_roles, compatible, CandidateContext};
use crate::discourse::{Agreement, Document, Gender, Markable, MarkableId, NpForm, Number, Role};
use crate::entity::{EntityId, Features, Site};

/// One forward-looking center with the realization that ranks it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CfEntry {
    pub entity: EntityId,
    pub features: Features,
    pub site: Site,
    pub pos: usize,
}

fn role_rank(role: Role) -> u8 {
    match role {
        Role::Subject => 0,
        Role::DirectObject => 1,
        Role::IndirectObject => 2,
        Role::Other => 3,
    }
}

/// Ranks the entities realized by `markables` by grammatical role, then text
/// position. An entity keeps its best-ranked realization. A complete
/// coordination adds its set entity right after its first member.
pub fn rank_cf<F>(doc: &Document, markables: &[&Markable], entity_of: F) -> Vec<CfEntry>
where
    F: Fn(&Markable) -> EntityId,
{
    let mut keyed: Vec<((u8, usize, u8), CfEntry)> = Vec::new();
    let mut groups: BTreeMap<&str, Vec<&Markable>> = BTreeMap::new();
    for m in markables.iter().copied().filter(|m| !m.is_excluded()) {
        let site = Site {
            clause: doc.clause_of(m),
            role: m.role,
        };
        keyed.push((
            (role_rank(m.role), m.start, 0),
            CfEntry {
                entity: entity_of(m),
                features: Features {
                    agreement: m.agreement,
                    sort_tag: m.sort_tag.clone(),
                },
                site,
                pos: m.start,
            },
        ));
        if let Some(g) = m.coordination_group.as_deref() {
            groups.entry(g).or_default().push(m);
        }
    }
    for (group, members) in groups {
        if members.len() < 2 {
            continue;
        }
        let first = members[0];
        let gender = if members.iter().all(|m| m.agreement.gender == first.agreement.gender) {
            first.agreement.gender
        } else {
            Gender::Unknown
        };
        keyed.push((
            (role_rank(first.role), first.start, 1),
            CfEntry {
                entity: EntityId::chain(group),
                features: Features {
                    agreement: Agreement::third(Number::Pl, gender),
                    sort_tag: None,
                },
                site: Site {
                    clause: doc.clause_of(first),
                    role: first.role,
                },
                pos: first.start,
            },
        ));
    }
    keyed.sort_by_key(|(k, _)| *k);
    let mut out: Vec<CfEntry> = Vec::new();
    for (_, e) in keyed {
        if !out.iter().any(|o| o.entity == e.entity) {
            out.push(e);
        }
    }
    out
}

/// Where a candidate antecedent came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Source {
    /// Index in the previous utterance's Cf.
    Previous(usize),
    /// Index among the earlier markables of the same utterance.
    Intra(usize),
    /// Found `k` utterances further back than the previous one.
    Fallback(usize),
    /// Fixed in advance, or a fresh entity for an unresolvable pronoun.
    Fixed,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Candidate {
    pub entity: EntityId,
    pub features: Features,
    pub site: Option<Site>,
    pub pos: usize,
    pub source: Source,
}

impl Candidate {
    pub fn fixed(entity: EntityId, anaphor: &Markable) -> Self {
        Candidate {
            entity,
            features: Features {
                agreement: anaphor.agreement,
                sort_tag: None,
            },
            site: None,
            pos: anaphor.start,
            source: Source::Fixed,
        }
    }

    fn from_cf(e: &CfEntry, source: Source) -> Self {
        Candidate {
            entity: e.entity.clone(),
            features: e.features.clone(),
            site: Some(e.site),
            pos: e.pos,
            source,
        }
    }
}

/// The previous utterance as seen from the current one.
#[derive(Debug, Clone, Copy)]
pub struct Prev<'a> {
    pub cf: &'a [CfEntry],
    pub cb: Option<&'a EntityId>,
}

/// One assignment of antecedents to the pronoun-like markables of an
/// utterance, with the centers it yields.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reading {
    pub assignments: Vec<(MarkableId, Candidate)>,
    pub cf: Vec<CfEntry>,
    pub cb: Option<EntityId>,
    pub transition: Option<Transition>,
}

impl Reading {
    pub fn entity_of(&self, anaphor: &MarkableId) -> Option<&EntityId> {
        self.assignments
            .iter()
            .find(|(id, _)| id == anaphor)
            .map(|(_, c)| &c.entity)
    }

    pub fn cp(&self) -> Option<&EntityId> {
        self.cf.first().map(|e| &e.entity)
    }

    pub fn assignment_map(&self) -> BTreeMap<String, String> {
        self.assignments
            .iter()
            .map(|(id, c)| (id.0.clone(), c.entity.to_string()))
            .collect()
    }

    fn same_assignment(&self, other: &Reading) -> bool {
        self.assignments
            .iter()
            .zip(&other.assignments)
            .all(|((_, a), (_, b))| a.entity == b.entity)
    }
}

fn entity_in_reading(
    m: &Markable,
    assigned: &HashMap<&MarkableId, &EntityId>,
    earlier: &HashMap<MarkableId, EntityId>,
) -> EntityId {
    if let Some(e) = assigned.get(&m.id) {
        return (*e).clone();
    }
    if let Some(e) = earlier.get(&m.id) {
        return e.clone();
    }
    match &m.chain {
        Some(c) => EntityId::Chain(c.clone()),
        None => EntityId::Fresh(m.id.clone()),
    }
}

/// Candidates for each pronoun-like markable of `u`: the previous Cf in rank
/// order, then the earlier non-pronominal markables of `u`.
pub fn candidate_lists(doc: &Document, u: &[&Markable], prev: Option<Prev<'_>>) -> Vec<Vec<Candidate>> {
    u.iter()
        .filter(|m| m.form.is_pronoun_like())
        .map(|p| {
            let mut out: Vec<Candidate> = prev
                .into_iter()
                .flat_map(|pr| pr.cf.iter().enumerate())
                .map(|(i, e)| Candidate::from_cf(e, Source::Previous(i)))
                .collect();
            let intra = u
                .iter()
                .filter(|m| !m.form.is_pronoun_like() && m.start < p.start && m.chain.is_some());
            for (j, m) in intra.enumerate() {
                let entity = EntityId::Chain(m.chain.clone().expect("filtered"));
                if out.iter().any(|c| c.entity == entity) {
                    continue;
                }
                out.push(Candidate {
                    entity,
                    features: Features {
                        agreement: m.agreement,
                        sort_tag: m.sort_tag.clone(),
                    },
                    site: Some(Site {
                        clause: doc.clause_of(m),
                        role: m.role,
                    }),
                    pos: m.start,
                    source: Source::Intra(j),
                });
            }
            out
        })
        .collect()
}

/// Number of readings the candidate lists would generate.
pub fn product_size(lists: &[Vec<Candidate>]) -> usize {
    lists
        .iter()
        .try_fold(1usize, |acc, l| acc.checked_mul(l.len()))
        .unwrap_or(usize::MAX)
}

/// Completes one reading: Cf, Cb and transition under the assignment.
pub fn evaluate_reading(
    doc: &Document,
    u: &[&Markable],
    prev: Option<Prev<'_>>,
    assignments: Vec<(MarkableId, Candidate)>,
    earlier: &HashMap<MarkableId, EntityId>,
) -> Reading {
    let assigned: HashMap<&MarkableId, &EntityId> =
        assignments.iter().map(|(id, c)| (id, &c.entity)).collect();
    let cf = rank_cf(doc, u, |m| entity_in_reading(m, &assigned, earlier));
    let cb = prev.and_then(|pr| {
        pr.cf
            .iter()
            .find(|e| cf.iter().any(|c| c.entity == e.entity))
            .map(|e| e.entity.clone())
    });
    let transition = match (&cb, cf.first()) {
        (Some(cb), Some(cp)) => Some(classify_transition(cb, prev.and_then(|p| p.cb), &cp.entity)),
        _ => None,
    };
    Reading {
        assignments,
        cf,
        cb,
        transition,
    }
}

/// Cartesian product over the candidate lists of the pronoun-like markables
/// of `u`, in text order.
pub fn generate_from(
    doc: &Document,
    u: &[&Markable],
    prev: Option<Prev<'_>>,
    lists: &[Vec<Candidate>],
    earlier: &HashMap<MarkableId, EntityId>,
) -> Vec<Reading> {
    let pronouns: Vec<&Markable> = u.iter().copied().filter(|m| m.form.is_pronoun_like()).collect();
    debug_assert_eq!(pronouns.len(), lists.len());
    let mut partial: Vec<Vec<(MarkableId, Candidate)>> = vec![Vec::new()];
    for (p, list) in pronouns.iter().zip(lists) {
        let mut next = Vec::with_capacity(partial.len() * list.len());
        for prefix in &partial {
            for c in list {
                let mut a = prefix.clone();
                a.push((p.id.clone(), c.clone()));
                next.push(a);
            }
        }
        partial = next;
    }
    partial
        .into_iter()
        .map(|a| evaluate_reading(doc, u, prev, a, earlier))
        .collect()
}

/// All readings of `u` given the previous utterance.
pub fn generate_readings(
    doc: &Document,
    u: &[&Markable],
    prev: Option<Prev<'_>>,
    earlier: &HashMap<MarkableId, EntityId>,
) -> Vec<Reading> {
    let lists = candidate_lists(doc, u, prev);
    generate_from(doc, u, prev, &lists, earlier)
}

/// If some element of the previous Cf is realized as a pronoun, the Cb is too.
pub fn satisfies_rule1(reading: &Reading, prev_cf: &[CfEntry]) -> bool {
    let pronominal: Vec<&EntityId> = reading.assignments.iter().map(|(_, c)| &c.entity).collect();
    let any = prev_cf.iter().any(|e| pronominal.contains(&&e.entity));
    !any || reading.cb.as_ref().is_some_and(|cb| pronominal.contains(&cb))
}

fn site_of(doc: &Document, m: &Markable) -> Site {
    Site {
        clause: doc.clause_of(m),
        role: m.role,
    }
}

/// No personal pronoun co-specifies one of its co-arguments under the reading.
pub fn satisfies_binding(doc: &Document, u: &[&Markable], reading: &Reading, earlier: &HashMap<MarkableId, EntityId>) -> bool {
    let assigned: HashMap<&MarkableId, &EntityId> =
        reading.assignments.iter().map(|(id, c)| (id, &c.entity)).collect();
    reading.assignments.iter().all(|(id, c)| {
        let Some(p) = u.iter().find(|m| &m.id == id) else {
            return true;
        };
        if p.form != NpForm::PersonalPronoun {
            return true;
        }
        let ps = site_of(doc, p);
        u.iter().filter(|m| m.id != p.id && !m.is_excluded()).all(|m| {
            !co_argument_roles(ps, site_of(doc, m))
                || entity_in_reading(m, &assigned, earlier) != c.entity
        })
    })
}

/// Drops readings that violate agreement, binding or sort for some pronoun,
/// or that violate Rule 1. Fixed assignments are exempt from the pairwise test.
pub fn filter_readings(
    doc: &Document,
    u: &[&Markable],
    prev: Option<Prev<'_>>,
    readings: Vec<Reading>,
    earlier: &HashMap<MarkableId, EntityId>,
) -> Vec<Reading> {
    let prev_cf: &[CfEntry] = prev.map_or(&[], |p| p.cf);
    readings
        .into_iter()
        .filter(|r| {
            r.assignments.iter().all(|(id, c)| {
                if c.source == Source::Fixed {
                    return true;
                }
                let Some(p) = u.iter().find(|m| &m.id == id) else {
                    return false;
                };
                compatible(&CandidateContext::between(p, site_of(doc, p), &c.features, c.site))
            })
        })
        .filter(|r| satisfies_binding(doc, u, r, earlier))
        .filter(|r| satisfies_rule1(r, prev_cf))
        .collect()
}

/// How a single answer is chosen among equally ranked readings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TieBreak {
    /// Prefer antecedents ranked higher in the previous Cf.
    #[default]
    CfRank,
    /// Prefer the nearest antecedent realization.
    Recency,
}

impl fmt::Display for TieBreak {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            TieBreak::CfRank => "cf-rank",
            TieBreak::Recency => "recency",
        })
    }
}

impl FromStr for TieBreak {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "cf-rank" => Ok(TieBreak::CfRank),
            "recency" => Ok(TieBreak::Recency),
            other => Err(format!("unknown tie-break `{other}` (expected cf-rank or recency)")),
        }
    }
}

fn tie_key(r: &Reading, prev_len: usize, tie: TieBreak, anaphor_pos: &HashMap<&MarkableId, usize>) -> Vec<usize> {
    r.assignments
        .iter()
        .map(|(id, c)| match tie {
            TieBreak::CfRank => match c.source {
                Source::Previous(i) => i,
                Source::Intra(j) => prev_len + j,
                Source::Fallback(_) | Source::Fixed => 0,
            },
            TieBreak::Recency => anaphor_pos
                .get(id)
                .map_or(0, |&p| p.saturating_sub(c.pos)),
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ranked {
    pub best: usize,
    pub ambiguous: bool,
    /// Readings sharing the best transition, best first.
    pub ties: Vec<usize>,
}

/// Picks the reading with the most preferred transition. Readings without a
/// Cb rank last.
pub fn rank_readings(
    readings: &[Reading],
    u: &[&Markable],
    prev_len: usize,
    tie: TieBreak,
) -> Option<Ranked> {
    let key = |r: &Reading| r.transition.map_or(Transition::ALL.len(), |t| t as usize);
    let min = readings.iter().map(key).min()?;
    let anaphor_pos: HashMap<&MarkableId, usize> = u.iter().map(|m| (&m.id, m.start)).collect();
    let mut ties: Vec<usize> = (0..readings.len()).filter(|&i| key(&readings[i]) == min).collect();
    ties.sort_by_key(|&i| tie_key(&readings[i], prev_len, tie, &anaphor_pos));
    let best = ties[0];
    let ambiguous = ties
        .iter()
        .any(|&i| !readings[i].same_assignment(&readings[best]));
    Some(Ranked {
        best,
        ambiguous,
        ties,
    })
}
