//! Annotated documents: data model, file format and segmentation.
//!
//! All linguistic analysis (tokens, clauses, agreement, roles, chains) arrives
//! as annotation. Nothing here parses text.

mod load;
mod model;
mod segment;

pub use load::{load_document, to_json};
pub use model::*;
pub use segment::{
    derive_segments, derive_segments_with, referring_expressions_in_order, segment_of, Segment,
};
