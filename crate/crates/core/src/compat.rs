//! Anaphor-candidate admissibility, shared by every engine: agreement,
//! binding (a Condition-B approximation over annotated roles) and sort.

use crate::discourse::{Agreement, Gender, Markable, NpForm};
use crate::entity::{Features, Site};

#[derive(Debug, Clone, Copy)]
pub struct CandidateContext<'a> {
    pub anaphor: &'a Markable,
    pub candidate: &'a Features,
    pub same_clause: bool,
    /// Anaphor and candidate are arguments of the same predicate.
    pub co_arguments: bool,
}

impl<'a> CandidateContext<'a> {
    pub fn new(
        anaphor: &'a Markable,
        candidate: &'a Features,
        same_clause: bool,
        co_arguments: bool,
    ) -> Self {
        debug_assert!(!co_arguments || same_clause);
        CandidateContext {
            anaphor,
            candidate,
            same_clause,
            co_arguments: co_arguments && same_clause,
        }
    }

    /// Derives the clause relations from the two sites.
    pub fn between(
        anaphor: &'a Markable,
        anaphor_site: Site,
        candidate: &'a Features,
        candidate_site: Option<Site>,
    ) -> Self {
        let same_clause = candidate_site.is_some_and(|s| s.clause == anaphor_site.clause);
        let co_arguments = same_clause
            && candidate_site.is_some_and(|s| co_argument_roles(anaphor_site, s));
        CandidateContext::new(anaphor, candidate, same_clause, co_arguments)
    }
}

/// Two sites in the same clause that both fill argument roles.
pub fn co_argument_roles(a: Site, b: Site) -> bool {
    a.clause == b.clause && a.role.is_argument() && b.role.is_argument()
}

/// Person and number must be equal; gender must be equal unless either side
/// is unknown.
pub fn agreement_matches(a: &Agreement, b: &Agreement) -> bool {
    a.person == b.person
        && a.number == b.number
        && (a.gender == b.gender || a.gender == Gender::Unknown || b.gender == Gender::Unknown)
}

/// A personal pronoun may not co-specify a co-argument. Possessives, relative
/// pronouns and ellipses are unrestricted.
pub fn binding_permits(ctx: &CandidateContext<'_>) -> bool {
    !(ctx.anaphor.form == NpForm::PersonalPronoun && ctx.co_arguments)
}

fn sort_permits(ctx: &CandidateContext<'_>) -> bool {
    match &ctx.anaphor.selectional_sort {
        None => true,
        Some(required) => ctx.candidate.sort_tag.as_deref() == Some(required.as_str()),
    }
}

pub fn compatible(ctx: &CandidateContext<'_>) -> bool {
    agreement_matches(&ctx.anaphor.agreement, &ctx.candidate.agreement)
        && binding_permits(ctx)
        && sort_permits(ctx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::discourse::{MarkableId, Number, Role};

    fn pronoun(form: NpForm, number: Number, gender: Gender) -> Markable {
        Markable {
            id: MarkableId::from("p"),
            start: 0,
            end: 0,
            form,
            agreement: Agreement::third(number, gender),
            sort_tag: None,
            role: Role::DirectObject,
            chain: None,
            predicative: false,
            pleonastic: false,
            in_direct_speech: false,
            split_antecedent: false,
            event_reference: false,
            coordination_group: None,
            anchor: None,
            elaborated_by: None,
            selectional_sort: None,
            inferrable: None,
        }
    }

    fn features(number: Number, gender: Gender) -> Features {
        Features {
            agreement: Agreement::third(number, gender),
            sort_tag: None,
        }
    }

    #[test]
    fn co_argument_personal_pronoun_is_blocked() {
        // "Friedman races her": her cannot be Friedman
        let her = pronoun(NpForm::PersonalPronoun, Number::Sg, Gender::Fem);
        let friedman = features(Number::Sg, Gender::Fem);
        let ctx = CandidateContext::new(&her, &friedman, true, true);
        assert!(!binding_permits(&ctx));
        assert!(!compatible(&ctx));
    }

    #[test]
    fn possessive_is_never_blocked() {
        let his = pronoun(NpForm::PossessivePronoun, Number::Sg, Gender::Masc);
        let curtis = features(Number::Sg, Gender::Masc);
        let ctx = CandidateContext::new(&his, &curtis, true, true);
        assert!(binding_permits(&ctx));
        assert!(compatible(&ctx));
    }

    #[test]
    fn different_sentences_bind_freely() {
        let she = pronoun(NpForm::PersonalPronoun, Number::Sg, Gender::Fem);
        let brennan = features(Number::Sg, Gender::Fem);
        let ctx = CandidateContext::new(&she, &brennan, false, false);
        assert!(binding_permits(&ctx));
        assert!(compatible(&ctx));
    }

    #[test]
    fn agreement_cases() {
        let she = pronoun(NpForm::PersonalPronoun, Number::Sg, Gender::Fem);
        let alfa = features(Number::Sg, Gender::Neut);
        assert!(!compatible(&CandidateContext::new(&she, &alfa, false, false)));

        let them = pronoun(NpForm::PersonalPronoun, Number::Pl, Gender::Unknown);
        let deer = features(Number::Pl, Gender::Neut);
        assert!(compatible(&CandidateContext::new(&them, &deer, false, false)));

        let unknown = features(Number::Sg, Gender::Unknown);
        assert!(compatible(&CandidateContext::new(&she, &unknown, false, false)));

        let mut first_person = features(Number::Sg, Gender::Fem);
        first_person.agreement.person = 1;
        assert!(!compatible(&CandidateContext::new(&she, &first_person, false, false)));
    }

    #[test]
    fn selectional_sort_restricts_candidates() {
        let mut gap = pronoun(NpForm::Ellipsis, Number::Sg, Gender::Masc);
        gap.selectional_sort = Some("official".into());
        let mut judge = features(Number::Sg, Gender::Masc);
        judge.sort_tag = Some("official".into());
        let mut curtis = features(Number::Sg, Gender::Masc);
        curtis.sort_tag = Some("person".into());
        assert!(compatible(&CandidateContext::new(&gap, &judge, false, false)));
        assert!(!compatible(&CandidateContext::new(&gap, &curtis, false, false)));
    }

    #[test]
    fn sites_derive_co_arguments() {
        let her = pronoun(NpForm::PersonalPronoun, Number::Sg, Gender::Fem);
        let f = features(Number::Sg, Gender::Fem);
        let obj = Site { clause: 2, role: Role::DirectObject };
        let subj = Site { clause: 2, role: Role::Subject };
        let other = Site { clause: 2, role: Role::Other };
        let elsewhere = Site { clause: 3, role: Role::Subject };
        assert!(CandidateContext::between(&her, obj, &f, Some(subj)).co_arguments);
        assert!(!CandidateContext::between(&her, obj, &f, Some(other)).co_arguments);
        let ctx = CandidateContext::between(&her, obj, &f, Some(elsewhere));
        assert!(!ctx.same_clause && !ctx.co_arguments);
        assert!(!CandidateContext::between(&her, obj, &f, None).same_clause);
    }
}
