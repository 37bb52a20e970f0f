//! The centering baseline: Cf ranking by grammatical role, Cb, transitions,
//! and generate-filter-rank over pronoun assignments.

mod engine;
mod readings;
mod transition;

pub use engine::{
    run_bfp, split_utterances_bfp, BfpEngine, ReadingSummary, UtteranceTrace, UtteranceUnit,
    MAX_READINGS,
};
pub use readings::{
    candidate_lists, evaluate_reading, filter_readings, generate_from, generate_readings,
    product_size, rank_cf, rank_readings, satisfies_binding, satisfies_rule1, Candidate, CfEntry,
    Prev, Ranked, Reading, Source, TieBreak,
};
pub use transition::{classify_transition, Transition};
