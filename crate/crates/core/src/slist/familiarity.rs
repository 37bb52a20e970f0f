use std::collections::HashMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::discourse::{Inferrable, Markable, MarkableId, NpForm};
use crate::entity::EntityId;

/// Position on the familiarity scale.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Familiarity {
    Evoked,
    Unused,
    Inferrable,
    ContainingInferrable,
    AnchoredBrandNew,
    BrandNew,
}

impl Familiarity {
    pub const ALL: [Familiarity; 6] = [
        Familiarity::Evoked,
        Familiarity::Unused,
        Familiarity::Inferrable,
        Familiarity::ContainingInferrable,
        Familiarity::AnchoredBrandNew,
        Familiarity::BrandNew,
    ];

    pub fn code(self) -> &'static str {
        match self {
            Familiarity::Evoked => "E",
            Familiarity::Unused => "U",
            Familiarity::Inferrable => "I",
            Familiarity::ContainingInferrable => "IC",
            Familiarity::AnchoredBrandNew => "BNA",
            Familiarity::BrandNew => "BN",
        }
    }

    pub fn status_set(self) -> StatusSet {
        status_set(self)
    }
}

impl fmt::Display for Familiarity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.code())
    }
}

impl Serialize for Familiarity {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.code())
    }
}

/// Hearer-old, mediated, hearer-new. Declaration order is rank order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum StatusSet {
    Old,
    Med,
    New,
}

pub fn status_set(f: Familiarity) -> StatusSet {
    match f {
        Familiarity::Evoked | Familiarity::Unused => StatusSet::Old,
        Familiarity::Inferrable
        | Familiarity::ContainingInferrable
        | Familiarity::AnchoredBrandNew => StatusSet::Med,
        Familiarity::BrandNew => StatusSet::New,
    }
}

/// Which entities have been realized so far in the document, with the class
/// of their latest realization, and which entity each processed markable got.
#[derive(Debug, Clone, Default)]
pub struct MentionHistory {
    last: HashMap<EntityId, Familiarity>,
    assigned: HashMap<MarkableId, EntityId>,
}

impl MentionHistory {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn record(&mut self, markable: &MarkableId, entity: &EntityId, class: Familiarity) {
        self.last.insert(entity.clone(), class);
        self.assigned.insert(markable.clone(), entity.clone());
    }

    pub fn has_mention(&self, entity: &EntityId) -> bool {
        self.last.contains_key(entity)
    }

    pub fn last_class(&self, entity: &EntityId) -> Option<Familiarity> {
        self.last.get(entity).copied()
    }

    pub fn entity_of(&self, markable: &MarkableId) -> Option<&EntityId> {
        self.assigned.get(markable)
    }

    pub fn set_class(&mut self, entity: &EntityId, class: Familiarity) {
        self.last.insert(entity.clone(), class);
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub familiarity: Familiarity,
    pub diagnostic: Option<String>,
}

/// Familiarity of `m` realizing `entity`, given everything processed before it.
///
/// Order of the tests: a prior mention makes any realization evoked (this
/// also covers appositives, relative pronouns and resolved pronouns);
/// annotated inferrables; proper names and titles are unused unless the name
/// carries an elaboration, in which case it stays brand-new until the
/// elaborating phrase is processed; anchored NPs are anchored brand-new when
/// the anchor's entity is evoked or unused; everything else is brand-new.
pub fn classify_realization(
    m: &Markable,
    entity: &EntityId,
    history: &MentionHistory,
) -> Classification {
    let plain = |familiarity| Classification {
        familiarity,
        diagnostic: None,
    };
    if history.has_mention(entity) {
        return plain(Familiarity::Evoked);
    }
    if matches!(m.form, NpForm::AppositiveNp | NpForm::RelativePronoun) {
        return plain(Familiarity::Evoked);
    }
    match m.inferrable {
        Some(Inferrable::Plain) => return plain(Familiarity::Inferrable),
        Some(Inferrable::Containing) => return plain(Familiarity::ContainingInferrable),
        None => {}
    }
    match m.form {
        NpForm::ProperName if m.elaborated_by.is_some() => return plain(Familiarity::BrandNew),
        NpForm::ProperName | NpForm::Title => return plain(Familiarity::Unused),
        _ => {}
    }
    if let Some(anchor) = &m.anchor {
        let anchor_class = history
            .entity_of(anchor)
            .and_then(|e| history.last_class(e));
        return match anchor_class {
            Some(Familiarity::Evoked | Familiarity::Unused) => plain(Familiarity::AnchoredBrandNew),
            other => Classification {
                familiarity: Familiarity::BrandNew,
                diagnostic: Some(format!(
                    "markable `{}`: anchor `{anchor}` is {} rather than evoked or unused; treated as brand-new",
                    m.id,
                    other.map_or("unrealized".to_owned(), |f| f.code().to_owned())
                )),
            },
        };
    }
    plain(Familiarity::BrandNew)
}
