//! The attentional state as one ranked list of salient discourse entities.
//!
//! Entities are ranked first by information status (hearer-old before
//! mediated before hearer-new), then by recency of utterance, then by text
//! position. Pronouns take the first compatible entity on the list; the list
//! is updated after every referring expression and purged at utterance end.

mod engine;
mod familiarity;
mod list;

pub use engine::{run_slist, SlistEngine, TraceAction, TraceEntry, TraceStep};
pub use familiarity::{
    classify_realization, status_set, Classification, Familiarity, MentionHistory, StatusSet,
};
pub use list::{precedes, Realization, SList, DEFAULT_MAX_LEN};
