use std::cmp::Reverse;
use std::collections::HashSet;

use super::familiarity::{Familiarity, StatusSet};
use crate::discourse::MarkableId;
use crate::entity::{EntityId, Features, Site};

/// One realization of a discourse entity: the entity, the utterance and
/// token position it is ranked by, and its familiarity class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Realization {
    pub entity: EntityId,
    pub utt: usize,
    pub pos: usize,
    pub familiarity: Familiarity,
    pub surface: String,
    pub features: Features,
    pub site: Option<Site>,
    pub markable: Option<MarkableId>,
}

impl Realization {
    pub fn status_set(&self) -> StatusSet {
        self.familiarity.status_set()
    }

    /// Smaller key ranks higher: status set, then later utterance, then
    /// earlier position.
    pub fn rank_key(&self) -> (StatusSet, Reverse<usize>, usize) {
        (self.status_set(), Reverse(self.utt), self.pos)
    }
}

/// `a` ranks strictly before `b` on the S-list.
pub fn precedes(a: &Realization, b: &Realization) -> bool {
    a.rank_key() < b.rank_key()
}

/// The ranked list of salient entities.
///
/// Only the first `max_len` items form the visible list that resolution
/// consults. Items ranked beyond the cap are kept in `overflow` until the
/// next utterance boundary, so an entity pushed out by higher-ranked
/// insertions reappears if the purge removes the items above it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SList {
    items: Vec<Realization>,
    overflow: Vec<Realization>,
    max_len: usize,
    current_utt: usize,
}

pub const DEFAULT_MAX_LEN: usize = 5;

impl Default for SList {
    fn default() -> Self {
        SList::new(DEFAULT_MAX_LEN)
    }
}

impl SList {
    pub fn new(max_len: usize) -> Self {
        assert!(max_len >= 1, "S-list length must be positive");
        SList {
            items: Vec::new(),
            overflow: Vec::new(),
            max_len,
            current_utt: 0,
        }
    }

    pub fn items(&self) -> &[Realization] {
        &self.items
    }

    pub fn overflow(&self) -> &[Realization] {
        &self.overflow
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    pub fn current_utt(&self) -> usize {
        self.current_utt
    }

    pub fn first(&self) -> Option<&Realization> {
        self.items.first()
    }

    pub fn get(&self, entity: &EntityId) -> Option<&Realization> {
        self.items.iter().find(|r| &r.entity == entity)
    }

    /// Empties the list and starts counting utterances at `utt`.
    pub fn reset(&mut self, utt: usize) {
        self.items.clear();
        self.overflow.clear();
        self.current_utt = utt;
    }

    /// Places `r` by the ranking constraints, replacing any earlier
    /// realization of the same entity.
    ///
    /// A re-realization within the same utterance that leaves the entity in
    /// the same status set keeps the position it was first ranked by; a
    /// change of utterance or of status set takes the new position.
    pub fn insert(&mut self, mut r: Realization) {
        debug_assert!(
            r.utt == self.current_utt || r.utt + 1 == self.current_utt,
            "realization from utterance {} inserted at utterance {}",
            r.utt,
            self.current_utt
        );
        let mut all = std::mem::take(&mut self.items);
        all.append(&mut self.overflow);
        if let Some(i) = all.iter().position(|old| old.entity == r.entity) {
            let old = all.remove(i);
            if old.utt == r.utt && old.status_set() == r.status_set() {
                r.pos = r.pos.min(old.pos);
            }
        }
        let at = all
            .iter()
            .position(|item| precedes(&r, item))
            .unwrap_or(all.len());
        all.insert(at, r);
        self.split(all);
    }

    /// The first visible item accepted by `test`.
    pub fn resolve<F>(&self, mut test: F) -> Option<&Realization>
    where
        F: FnMut(&Realization) -> bool,
    {
        self.items.iter().find(|r| test(r))
    }

    /// Drops every entity not realized in the finished utterance and moves on
    /// to the next one.
    pub fn end_of_utterance(&mut self, realized: &HashSet<EntityId>) {
        let mut all = std::mem::take(&mut self.items);
        all.append(&mut self.overflow);
        all.retain(|r| realized.contains(&r.entity));
        self.split(all);
        self.current_utt += 1;
    }

    /// Re-classifies an entity in place, re-ranking it.
    pub fn reclassify(&mut self, entity: &EntityId, familiarity: Familiarity, pos: usize) {
        let found = self
            .items
            .iter()
            .chain(self.overflow.iter())
            .find(|r| &r.entity == entity)
            .cloned();
        if let Some(mut r) = found {
            if r.familiarity != familiarity {
                if r.status_set() != familiarity.status_set() {
                    r.pos = pos;
                }
                r.familiarity = familiarity;
                self.insert(r);
            }
        }
    }

    fn split(&mut self, mut all: Vec<Realization>) {
        if all.len() > self.max_len {
            self.overflow = all.split_off(self.max_len);
        }
        self.items = all;
    }
}
