use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::Range;

use serde::{Deserialize, Serialize};

/// Identifier of a markable as it appears in the input file.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MarkableId(pub String);

impl fmt::Display for MarkableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(&self.0)
    }
}

impl From<&str> for MarkableId {
    fn from(s: &str) -> Self {
        MarkableId(s.to_owned())
    }
}

/// Identifier of a gold coreference chain.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ChainId(pub String);

impl fmt::Display for ChainId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(&self.0)
    }
}

impl From<&str> for ChainId {
    fn from(s: &str) -> Self {
        ChainId(s.to_owned())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    /// Document-wide word position.
    pub index: usize,
    pub surface: String,
    pub sentence: usize,
    pub clause: usize,
    pub paragraph: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClauseClass {
    Main,
    ReportedSpeech,
    NonReportComplement,
    Relative,
    OtherTensed,
    Untensed,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Clause {
    pub id: usize,
    pub sentence: usize,
    pub tensed: bool,
    pub class: ClauseClass,
    pub parent: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NpForm {
    PersonalPronoun,
    PossessivePronoun,
    ProperName,
    Title,
    DefiniteNp,
    IndefiniteNp,
    RelativePronoun,
    AppositiveNp,
    Ellipsis,
}

impl NpForm {
    /// Forms resolved by lookup rather than taken from the gold chains.
    pub fn is_pronoun_like(self) -> bool {
        matches!(
            self,
            NpForm::PersonalPronoun | NpForm::PossessivePronoun | NpForm::Ellipsis
        )
    }

    /// Overt personal and possessive pronouns.
    pub fn is_pronoun(self) -> bool {
        matches!(self, NpForm::PersonalPronoun | NpForm::PossessivePronoun)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Number {
    Sg,
    Pl,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Gender {
    Masc,
    Fem,
    Neut,
    Unknown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Agreement {
    pub person: u8,
    pub number: Number,
    pub gender: Gender,
}

impl Agreement {
    pub fn third(number: Number, gender: Gender) -> Self {
        Agreement {
            person: 3,
            number,
            gender,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Role {
    Subject,
    DirectObject,
    IndirectObject,
    Other,
}

impl Role {
    /// Subject, direct and indirect object are arguments of their clause's predicate.
    pub fn is_argument(self) -> bool {
        !matches!(self, Role::Other)
    }
}

/// Explicit inferrable annotation; all other familiarity classes are derived.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Inferrable {
    #[serde(rename = "I")]
    Plain,
    #[serde(rename = "IC")]
    Containing,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Markable {
    pub id: MarkableId,
    /// Inclusive token span.
    pub start: usize,
    pub end: usize,
    pub form: NpForm,
    pub agreement: Agreement,
    pub sort_tag: Option<String>,
    pub role: Role,
    pub chain: Option<ChainId>,
    pub predicative: bool,
    pub pleonastic: bool,
    pub in_direct_speech: bool,
    /// Gold annotation: the pronoun has a split antecedent.
    pub split_antecedent: bool,
    /// Gold annotation: the pronoun refers to an event.
    pub event_reference: bool,
    pub coordination_group: Option<String>,
    pub anchor: Option<MarkableId>,
    pub elaborated_by: Option<MarkableId>,
    pub selectional_sort: Option<String>,
    pub inferrable: Option<Inferrable>,
}

impl Markable {
    /// Predicative NPs, pleonastic pronouns and direct-speech material never
    /// take part in resolution.
    pub fn is_excluded(&self) -> bool {
        self.predicative || self.pleonastic || self.in_direct_speech
    }

    pub fn span_key(&self) -> (usize, usize) {
        (self.start, self.end)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sentence {
    pub id: usize,
    pub paragraph: usize,
    pub tokens: Range<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Paragraph {
    pub id: usize,
    pub sentences: Range<usize>,
}

/// A fully linked, validated annotated document. Built by [`crate::load_document`].
#[derive(Debug, Clone, PartialEq)]
pub struct Document {
    /// Corpus group used when aggregating scores (e.g. one group per source).
    pub group: Option<String>,
    pub tokens: Vec<Token>,
    pub clauses: Vec<Clause>,
    /// Sorted by `(start, end)`; equal spans keep input order.
    pub markables: Vec<Markable>,
    pub sentences: Vec<Sentence>,
    pub paragraphs: Vec<Paragraph>,
    /// Chain members in text order.
    pub chains: BTreeMap<ChainId, Vec<MarkableId>>,
    pub(crate) markable_index: HashMap<MarkableId, usize>,
    pub(crate) clause_index: HashMap<usize, usize>,
}

impl Document {
    pub fn markable(&self, id: &MarkableId) -> Option<&Markable> {
        self.markable_index.get(id).map(|&i| &self.markables[i])
    }

    pub fn markable_position(&self, id: &MarkableId) -> Option<usize> {
        self.markable_index.get(id).copied()
    }

    pub fn clause(&self, id: usize) -> Option<&Clause> {
        self.clause_index.get(&id).map(|&i| &self.clauses[i])
    }

    pub fn sentence_of(&self, m: &Markable) -> usize {
        self.tokens[m.start].sentence
    }

    /// The clause of a markable is the clause of its first token.
    pub fn clause_of(&self, m: &Markable) -> usize {
        self.tokens[m.start].clause
    }

    pub fn text(&self, start: usize, end: usize) -> String {
        self.tokens[start..=end]
            .iter()
            .map(|t| t.surface.as_str())
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn surface(&self, m: &Markable) -> String {
        self.text(m.start, m.end)
    }

    /// Markables of one sentence, in document order.
    pub fn markables_in_sentence(&self, sentence: usize) -> impl Iterator<Item = &Markable> {
        self.markables
            .iter()
            .filter(move |m| self.sentence_of(m) == sentence)
    }

    /// The nearest gold mention of `m`'s chain that precedes `m` in text order.
    pub fn gold_antecedent(&self, m: &Markable) -> Option<&Markable> {
        let chain = m.chain.as_ref()?;
        self.chains
            .get(chain)?
            .iter()
            .rev()
            .filter_map(|id| self.markable(id))
            .find(|other| other.span_key() < m.span_key())
    }

    /// Walks `parent` links up to the top-level clause.
    pub fn root_clause(&self, clause: usize) -> usize {
        let mut current = clause;
        while let Some(parent) = self.clause(current).and_then(|c| c.parent) {
            current = parent;
        }
        current
    }
}
