use std::ops::Range;

use serde::Serialize;

use super::model::{ClauseClass, Document, Markable, Role};
use crate::compat::agreement_matches;

/// A discourse segment: a run of whole paragraphs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Segment {
    pub id: usize,
    /// Sentence indices covered by the segment.
    pub sentences: Range<usize>,
}

impl Segment {
    pub fn contains_sentence(&self, sentence: usize) -> bool {
        self.sentences.contains(&sentence)
    }
}

/// Segments with the default probe, agreement-feature match.
pub fn derive_segments(doc: &Document) -> Vec<Segment> {
    derive_segments_with(doc, |pronoun, np| {
        agreement_matches(&pronoun.agreement, &np.agreement)
    })
}

/// Every paragraph opens a segment unless its first sentence contains a
/// pronoun that is the subject of a main clause, or a pronoun that no earlier
/// noun phrase of the same sentence matches according to `probe`. Such a
/// paragraph continues the previous segment.
pub fn derive_segments_with<F>(doc: &Document, probe: F) -> Vec<Segment>
where
    F: Fn(&Markable, &Markable) -> bool,
{
    let mut segments: Vec<Segment> = Vec::new();
    for para in &doc.paragraphs {
        let first = para.sentences.start;
        let opens = segments.is_empty() || !continues_previous(doc, first, &probe);
        match segments.last_mut() {
            Some(seg) if !opens => seg.sentences.end = para.sentences.end,
            _ => segments.push(Segment {
                id: segments.len(),
                sentences: para.sentences.clone(),
            }),
        }
    }
    segments
}

fn continues_previous<F>(doc: &Document, sentence: usize, probe: &F) -> bool
where
    F: Fn(&Markable, &Markable) -> bool,
{
    let mentions: Vec<&Markable> = doc
        .markables_in_sentence(sentence)
        .filter(|m| !m.is_excluded())
        .collect();
    mentions.iter().enumerate().any(|(i, m)| {
        if !m.form.is_pronoun() {
            return false;
        }
        let main_subject = m.role == Role::Subject
            && doc
                .clause(doc.clause_of(m))
                .is_some_and(|c| c.class == ClauseClass::Main);
        let unmatched = !mentions[..i]
            .iter()
            .filter(|np| !np.form.is_pronoun_like() && np.start < m.start)
            .any(|np| probe(m, np));
        main_subject || unmatched
    })
}

/// Referring expressions in processing order: by `(start, end)`, shorter span
/// first on equal starts. Predicative NPs, pleonastic pronouns and
/// direct-speech material are left out.
pub fn referring_expressions_in_order(doc: &Document) -> Vec<&Markable> {
    let mut out: Vec<&Markable> = doc.markables.iter().filter(|m| !m.is_excluded()).collect();
    out.sort_by_key(|m| m.span_key());
    out
}

/// Segment lookup by sentence.
pub fn segment_of(segments: &[Segment], sentence: usize) -> usize {
    segments
        .iter()
        .position(|s| s.contains_sentence(sentence))
        .unwrap_or(0)
}
