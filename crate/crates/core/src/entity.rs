use std::fmt;

use serde::{Serialize, Serializer};

use crate::discourse::{Agreement, ChainId, Document, MarkableId, Role};

/// A discourse entity as the engines see it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EntityId {
    /// The referent of a gold chain (or of a coordination set).
    Chain(ChainId),
    /// Introduced by a pronoun that found no antecedent.
    Fresh(MarkableId),
}

impl EntityId {
    pub fn chain(name: &str) -> Self {
        EntityId::Chain(ChainId(name.to_owned()))
    }

    /// Whether this system entity denotes the referent of `gold`.
    pub fn denotes(&self, gold: &ChainId, doc: &Document) -> bool {
        match self {
            EntityId::Chain(c) => c == gold,
            EntityId::Fresh(origin) => doc
                .markable(origin)
                .and_then(|m| m.chain.as_ref())
                .is_some_and(|c| c == gold),
        }
    }
}

impl fmt::Display for EntityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EntityId::Chain(c) => f.pad(&c.0),
            EntityId::Fresh(m) => f.pad(&format!("new:{m}")),
        }
    }
}

impl Serialize for EntityId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Agreement and sort of one realization, as consulted by the compatibility test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Features {
    pub agreement: Agreement,
    pub sort_tag: Option<String>,
}

/// Where a realization sits syntactically; used for the binding test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Site {
    pub clause: usize,
    pub role: Role,
}
