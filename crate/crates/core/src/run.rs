//! What every engine produces, and the interface the evaluator drives.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::centering::UtteranceTrace;
use crate::discourse::{ChainId, Document, MarkableId};
use crate::entity::EntityId;
use crate::slist::TraceStep;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Algorithm {
    Slist,
    Bfp,
    BfpKameyama,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Slist => "slist",
            Algorithm::Bfp => "bfp",
            Algorithm::BfpKameyama => "bfp-kameyama",
        }
    }

    pub fn is_centering(self) -> bool {
        !matches!(self, Algorithm::Slist)
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "slist" => Ok(Algorithm::Slist),
            "bfp" => Ok(Algorithm::Bfp),
            "bfp-kameyama" => Ok(Algorithm::BfpKameyama),
            other => Err(format!(
                "unknown algorithm `{other}` (expected slist, bfp or bfp-kameyama)"
            )),
        }
    }
}

/// One attempted resolution of a pronoun-like markable.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ResolutionRecord {
    pub anaphor: MarkableId,
    pub system: EntityId,
    pub gold: Option<ChainId>,
    pub algorithm: Algorithm,
    pub ambiguous: bool,
    /// Distinct antecedents proposed by equally ranked readings (centering only).
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub tied: Vec<EntityId>,
    /// 0 when found in the normal search space; k when found k states/utterances further back.
    pub fallback_depth: usize,
    pub segment: usize,
}

impl ResolutionRecord {
    /// A pronoun left as the start of a fresh entity is correct only when
    /// gold gives it no antecedent either.
    pub fn is_correct(&self, doc: &Document) -> bool {
        let Some(gold) = &self.gold else {
            return false;
        };
        if self.system == EntityId::Fresh(self.anaphor.clone()) {
            return doc
                .markable(&self.anaphor)
                .is_some_and(|m| doc.gold_antecedent(m).is_none());
        }
        self.system.denotes(gold, doc)
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum Trace {
    Slist(Vec<TraceStep>),
    Centering(Vec<UtteranceTrace>),
}

#[derive(Debug, Clone, Serialize)]
pub struct RunResult {
    pub algorithm: Algorithm,
    pub records: Vec<ResolutionRecord>,
    pub trace: Trace,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub diagnostics: Vec<String>,
}

impl RunResult {
    pub fn record(&self, anaphor: &str) -> Option<&ResolutionRecord> {
        self.records.iter().find(|r| r.anaphor.0 == anaphor)
    }

    /// Anaphor id → system entity, in record order.
    pub fn resolutions(&self) -> Vec<(String, String)> {
        self.records
            .iter()
            .map(|r| (r.anaphor.0.clone(), r.system.to_string()))
            .collect()
    }
}

/// Pronoun-like markables whose referent is fixed in advance (counterfactual re-runs).
pub type Forced = BTreeMap<MarkableId, EntityId>;

/// A resolver that can be run over a document, optionally with some
/// pronouns forced to a given entity.
pub trait Engine {
    fn algorithm(&self) -> Algorithm;

    fn run_forced(&self, doc: &Document, forced: &Forced) -> RunResult;

    fn run(&self, doc: &Document) -> RunResult {
        self.run_forced(doc, &Forced::new())
    }
}
