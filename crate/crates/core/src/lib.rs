//! Pronoun resolution over a ranked list of salient discourse entities.
//!
//! Documents arrive fully annotated (tokens, clauses, markables, gold
//! chains); see [`load_document`]. Three engines share the [`Engine`] trait:
//!
//! - [`SlistEngine`]: one ranked list of entities, ordered by information
//!   status, then recency, then position, updated word by word.
//! - [`BfpEngine`]: centering with generate, filter and rank, over sentence
//!   utterances or (with [`BfpEngine::kameyama`]) clause utterances.
//!
//! [`evaluate`] scores a run and sorts its errors into categories.
//!
//! ```
//! use slist_anaphora::{load_document, Engine, SlistEngine};
//!
//! let json = br#"{
//!   "tokens": [
//!     {"i": 0, "w": "Anna", "sent": 0, "clause": 0, "para": 0},
//!     {"i": 1, "w": "laughed", "sent": 0, "clause": 0, "para": 0},
//!     {"i": 2, "w": ".", "sent": 0, "clause": 0, "para": 0},
//!     {"i": 3, "w": "She", "sent": 1, "clause": 1, "para": 0},
//!     {"i": 4, "w": "left", "sent": 1, "clause": 1, "para": 0},
//!     {"i": 5, "w": ".", "sent": 1, "clause": 1, "para": 0}
//!   ],
//!   "clauses": [
//!     {"id": 0, "sent": 0, "tensed": true, "class": "main"},
//!     {"id": 1, "sent": 1, "tensed": true, "class": "main"}
//!   ],
//!   "markables": [
//!     {"id": "anna", "span": [0, 0], "form": "proper_name",
//!      "agr": {"p": 3, "n": "sg", "g": "fem"}, "role": "subject", "chain": "Anna"},
//!     {"id": "she", "span": [3, 3], "form": "personal_pronoun",
//!      "agr": {"p": 3, "n": "sg", "g": "fem"}, "role": "subject", "chain": "Anna"}
//!   ]
//! }"#;
//! let doc = load_document(json).unwrap();
//! let run = SlistEngine::default().run(&doc);
//! assert_eq!(run.record("she").unwrap().system.to_string(), "Anna");
//! ```

pub mod centering;
pub mod cli;
pub mod compat;
pub mod discourse;
pub mod entity;
pub mod error;
pub mod eval;
pub mod kameyama;
pub mod run;
pub mod slist;

pub use centering::{BfpEngine, TieBreak, Transition};
pub use discourse::{derive_segments, load_document, to_json, Document, Segment};
pub use entity::EntityId;
pub use error::{Error, Result};
pub use eval::{classify_errors, evaluate, score, AmbigMode, Category, Evaluation, ScoreTable};
pub use run::{Algorithm, Engine, Forced, ResolutionRecord, RunResult, Trace};
pub use slist::{SList, SlistEngine};
