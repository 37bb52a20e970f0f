//! Scoring against the gold chains and error classification.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::ops::AddAssign;
use std::str::FromStr;

use serde::Serialize;

use crate::discourse::{derive_segments, ChainId, Document, Segment};
use crate::entity::EntityId;
use crate::error::{Error, Result};
use crate::run::{Engine, Forced, ResolutionRecord, RunResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OtherReason {
    SplitAntecedent,
    EventAnaphora,
    SegmentBoundary,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case", tag = "category", content = "reason")]
pub enum Category {
    Ambiguous,
    Chain,
    Other(OtherReason),
    Intra,
    Strategic,
}

/// When an ambiguous centering record counts as wrong (ambig.).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum AmbigMode {
    /// Only when the tie-break missed gold and gold was among the ties.
    #[default]
    WrongOnly,
    /// Every ambiguous record whose ties include gold, whatever was picked.
    Strict,
}

impl fmt::Display for AmbigMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            AmbigMode::WrongOnly => "wrong-only",
            AmbigMode::Strict => "strict",
        })
    }
}

impl FromStr for AmbigMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "wrong-only" => Ok(AmbigMode::WrongOnly),
            "strict" => Ok(AmbigMode::Strict),
            other => Err(format!("unknown ambiguity mode `{other}` (expected wrong-only or strict)")),
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct ScoreTable {
    pub total: usize,
    pub correct: usize,
    pub wrong: usize,
    pub wrong_strategic: usize,
    pub wrong_ambiguous: usize,
    pub wrong_intra: usize,
    pub wrong_chain: usize,
    pub wrong_other: usize,
    pub other_split_antecedent: usize,
    pub other_segment_boundary: usize,
    pub other_event_anaphora: usize,
}

impl ScoreTable {
    pub fn add(&mut self, category: Option<Category>) {
        self.total += 1;
        let Some(category) = category else {
            self.correct += 1;
            return;
        };
        self.wrong += 1;
        match category {
            Category::Strategic => self.wrong_strategic += 1,
            Category::Ambiguous => self.wrong_ambiguous += 1,
            Category::Intra => self.wrong_intra += 1,
            Category::Chain => self.wrong_chain += 1,
            Category::Other(reason) => {
                self.wrong_other += 1;
                match reason {
                    OtherReason::SplitAntecedent => self.other_split_antecedent += 1,
                    OtherReason::SegmentBoundary => self.other_segment_boundary += 1,
                    OtherReason::EventAnaphora => self.other_event_anaphora += 1,
                }
            }
        }
    }

    pub fn from_categories<'a>(categories: impl IntoIterator<Item = &'a Option<Category>>) -> Self {
        let mut t = ScoreTable::default();
        for c in categories {
            t.add(*c);
        }
        t
    }

    pub fn category_sum(&self) -> usize {
        self.wrong_strategic + self.wrong_ambiguous + self.wrong_intra + self.wrong_chain + self.wrong_other
    }

    /// correct + wrong = total, and the categories partition wrong.
    pub fn is_consistent(&self) -> bool {
        self.correct + self.wrong == self.total
            && self.category_sum() == self.wrong
            && self.other_split_antecedent + self.other_segment_boundary + self.other_event_anaphora
                == self.wrong_other
    }

    fn rows(&self) -> [(&'static str, usize); 7] {
        [
            ("Correct", self.correct),
            ("Wrong", self.wrong),
            ("Wrong (strat.)", self.wrong_strategic),
            ("Wrong (ambig.)", self.wrong_ambiguous),
            ("Wrong (intra)", self.wrong_intra),
            ("Wrong (chain)", self.wrong_chain),
            ("Wrong (other)", self.wrong_other),
        ]
    }
}

impl AddAssign for ScoreTable {
    fn add_assign(&mut self, o: Self) {
        self.total += o.total;
        self.correct += o.correct;
        self.wrong += o.wrong;
        self.wrong_strategic += o.wrong_strategic;
        self.wrong_ambiguous += o.wrong_ambiguous;
        self.wrong_intra += o.wrong_intra;
        self.wrong_chain += o.wrong_chain;
        self.wrong_other += o.wrong_other;
        self.other_split_antecedent += o.other_split_antecedent;
        self.other_segment_boundary += o.other_segment_boundary;
        self.other_event_anaphora += o.other_event_anaphora;
    }
}

/// Correct and wrong counts only; categories need [`classify_errors`].
pub fn score(records: &[ResolutionRecord], doc: &Document) -> Result<ScoreTable> {
    let mut t = ScoreTable::default();
    for r in records {
        if doc.markable(&r.anaphor).is_none() {
            return Err(Error::UnknownMarkable(r.anaphor.0.clone()));
        }
        t.total += 1;
        if r.is_correct(doc) {
            t.correct += 1;
        } else {
            t.wrong += 1;
        }
    }
    Ok(t)
}

fn tie_includes_gold(r: &ResolutionRecord, doc: &Document) -> bool {
    match &r.gold {
        Some(g) => r.ambiguous && r.tied.iter().any(|e| e.denotes(g, doc)),
        None => false,
    }
}

fn other_reason(r: &ResolutionRecord, doc: &Document, segments: &[Segment]) -> Option<OtherReason> {
    let m = doc.markable(&r.anaphor)?;
    if m.split_antecedent {
        return Some(OtherReason::SplitAntecedent);
    }
    if m.event_reference {
        return Some(OtherReason::EventAnaphora);
    }
    let in_segment = doc.gold_antecedent(m).is_some_and(|a| {
        segments
            .get(r.segment)
            .is_some_and(|s| s.contains_sentence(doc.sentence_of(a)))
    });
    (!in_segment).then_some(OtherReason::SegmentBoundary)
}

/// Error category for every record, `None` for records counted correct.
///
/// Priority: ambiguity, chain, other, intra, strategic. A chain error is one
/// that disappears when every earlier pronoun of its segment is forced to its
/// gold referent and the document is run again.
pub fn classify_errors<F>(
    records: &[ResolutionRecord],
    doc: &Document,
    rerun: F,
    mode: AmbigMode,
) -> Result<Vec<Option<Category>>>
where
    F: Fn(&Forced) -> RunResult,
{
    let segments = derive_segments(doc);
    let mut out = Vec::with_capacity(records.len());
    for (i, r) in records.iter().enumerate() {
        let m = doc
            .markable(&r.anaphor)
            .ok_or_else(|| Error::UnknownMarkable(r.anaphor.0.clone()))?;
        let correct = r.is_correct(doc);
        let ambiguous = r.algorithm.is_centering() && tie_includes_gold(r, doc);
        if ambiguous && (mode == AmbigMode::Strict || !correct) {
            out.push(Some(Category::Ambiguous));
            continue;
        }
        if correct {
            out.push(None);
            continue;
        }

        let earlier: Vec<&ResolutionRecord> =
            records[..i].iter().filter(|e| e.segment == r.segment).collect();
        let any_off = earlier
            .iter()
            .any(|e| e.gold.as_ref().is_some_and(|g| e.system != EntityId::Chain(g.clone())));
        if any_off {
            let forced: Forced = earlier
                .iter()
                .filter_map(|e| e.gold.as_ref().map(|g| (e.anaphor.clone(), EntityId::Chain(g.clone()))))
                .collect();
            let again = rerun(&forced);
            if again.record(&r.anaphor.0).is_some_and(|x| x.is_correct(doc)) {
                out.push(Some(Category::Chain));
                continue;
            }
        }

        if let Some(reason) = other_reason(r, doc, &segments) {
            out.push(Some(Category::Other(reason)));
            continue;
        }
        let intra = r.algorithm.is_centering()
            && doc
                .gold_antecedent(m)
                .is_some_and(|a| doc.sentence_of(a) == doc.sentence_of(m));
        out.push(Some(if intra { Category::Intra } else { Category::Strategic }));
    }
    Ok(out)
}

/// One scored record.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Outcome {
    pub anaphor: String,
    pub surface: String,
    pub system: EntityId,
    pub gold: Option<ChainId>,
    pub correct: bool,
    pub ambiguous: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<Category>,
    pub fallback_depth: usize,
}

/// A run of one engine over one document, scored.
#[derive(Debug, Clone, Serialize)]
pub struct Evaluation {
    pub run: RunResult,
    pub outcomes: Vec<Outcome>,
    pub table: ScoreTable,
}

pub fn evaluate<E: Engine + ?Sized>(engine: &E, doc: &Document, mode: AmbigMode) -> Result<Evaluation> {
    let run = engine.run(doc);
    let categories = classify_errors(&run.records, doc, |f| engine.run_forced(doc, f), mode)?;
    let table = ScoreTable::from_categories(&categories);
    let outcomes = run
        .records
        .iter()
        .zip(&categories)
        .map(|(r, c)| Outcome {
            anaphor: r.anaphor.0.clone(),
            surface: doc.markable(&r.anaphor).map(|m| doc.surface(m)).unwrap_or_default(),
            system: r.system.clone(),
            gold: r.gold.clone(),
            correct: c.is_none(),
            ambiguous: r.ambiguous,
            error: *c,
            fallback_depth: r.fallback_depth,
        })
        .collect();
    Ok(Evaluation { run, outcomes, table })
}

/// Score tables side by side, one column per group plus a total.
pub fn render_table(title: &str, groups: &BTreeMap<String, ScoreTable>) -> String {
    let mut total = ScoreTable::default();
    for t in groups.values() {
        total += *t;
    }
    let mut columns: Vec<(&str, &ScoreTable)> = groups.iter().map(|(g, t)| (g.as_str(), t)).collect();
    if groups.len() != 1 {
        columns.push(("Total", &total));
    }
    let width = columns.iter().map(|(n, _)| n.len()).max().unwrap_or(5).max(5);
    let mut out = String::new();
    let _ = write!(out, "{title:<16}");
    for (name, _) in &columns {
        let _ = write!(out, " {name:>width$}");
    }
    out.push('\n');
    for (row, i) in ScoreTable::default().rows().iter().zip(0..) {
        let _ = write!(out, "{:<16}", row.0);
        for (_, t) in &columns {
            let _ = write!(out, " {:>width$}", t.rows()[i].1);
        }
        out.push('\n');
    }
    out
}
