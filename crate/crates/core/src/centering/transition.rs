use std::fmt;

use serde::Serialize;

use crate::entity::EntityId;

/// Transition between two adjacent utterances. Declaration order is the
/// preference order: lower is preferred.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Transition {
    Continue,
    Retain,
    SmoothShift,
    RoughShift,
}

impl Transition {
    pub const ALL: [Transition; 4] = [
        Transition::Continue,
        Transition::Retain,
        Transition::SmoothShift,
        Transition::RoughShift,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Transition::Continue => "CONTINUE",
            Transition::Retain => "RETAIN",
            Transition::SmoothShift => "SMOOTH_SHIFT",
            Transition::RoughShift => "ROUGH_SHIFT",
        }
    }
}

impl fmt::Display for Transition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

/// The transition into an utterance with backward-looking center `cb` and
/// preferred center `cp`, given the previous utterance's `cb_prev`.
pub fn classify_transition(cb: &EntityId, cb_prev: Option<&EntityId>, cp: &EntityId) -> Transition {
    let same_cb = cb_prev.is_none_or(|prev| prev == cb);
    match (same_cb, cb == cp) {
        (true, true) => Transition::Continue,
        (true, false) => Transition::Retain,
        (false, true) => Transition::SmoothShift,
        (false, false) => Transition::RoughShift,
    }
}
