mod common;

use common::*;
use slist_anaphora::eval::OtherReason;
use slist_anaphora::{
    classify_errors, evaluate, score, AmbigMode, BfpEngine, Category, Engine, EntityId, Error,
    Forced, SlistEngine, TieBreak,
};

#[test]
fn categories_partition_wrong_on_every_fixture_and_engine() {
    for name in FIXTURES {
        let doc = fixture(name);
        for engine in engines() {
            for mode in [AmbigMode::WrongOnly, AmbigMode::Strict] {
                let ev = evaluate(engine.as_ref(), &doc, mode).unwrap();
                assert!(ev.table.is_consistent(), "{name} {} {:?}", engine.algorithm(), ev.table);
                assert_eq!(ev.table.total, ev.run.records.len());
            }
        }
    }
}

#[test]
fn categories_partition_wrong_with_injected_errors() {
    for name in FIXTURES {
        let doc = fixture(name);
        for engine in engines() {
            for step in 1..=3 {
                let mut run = engine.run(&doc);
                inject_errors(&mut run, step);
                let cats = classify_errors(&run.records, &doc, |f| engine.run_forced(&doc, f), AmbigMode::WrongOnly)
                    .unwrap();
                let t = slist_anaphora::ScoreTable::from_categories(&cats);
                assert!(t.is_consistent(), "{name} step {step}: {t:?}");
                assert_eq!(t.wrong, score(&run.records, &doc).unwrap().wrong);
            }
        }
    }
}

#[test]
fn score_ignores_record_order() {
    let doc = fixture("example3");
    let mut run = SlistEngine::default().run(&doc);
    inject_errors(&mut run, 2);
    let before = score(&run.records, &doc).unwrap();
    run.records.reverse();
    assert_eq!(before, score(&run.records, &doc).unwrap());
    run.records.rotate_left(2);
    assert_eq!(before, score(&run.records, &doc).unwrap());
}

#[test]
fn forcing_every_pronoun_to_gold_leaves_nothing_wrong() {
    for name in FIXTURES {
        let doc = fixture(name);
        for engine in engines() {
            let forced: Forced = engine
                .run(&doc)
                .records
                .iter()
                .filter_map(|r| r.gold.clone().map(|g| (r.anaphor.clone(), EntityId::Chain(g))))
                .collect();
            let run = engine.run_forced(&doc, &forced);
            let t = score(&run.records, &doc).unwrap();
            assert_eq!(t.wrong, 0, "{name} {}", engine.algorithm());
        }
    }
}

#[test]
fn chain_error_fixture_is_a_chain_error() {
    let doc = fixture("chain_error");
    let ev = evaluate(&SlistEngine::default(), &doc, AmbigMode::WrongOnly).unwrap();
    let cat = |id: &str| ev.outcomes.iter().find(|o| o.anaphor == id).unwrap().error;
    assert_eq!(cat("she_1"), Some(Category::Strategic));
    assert_eq!(cat("she_2"), Some(Category::Chain));
    assert_eq!(ev.table.wrong_chain, 1);
}

#[test]
fn example5_centering_error_is_ambiguous_not_strategic() {
    let doc = fixture("example5");
    let ev = evaluate(&BfpEngine::new(TieBreak::CfRank), &doc, AmbigMode::WrongOnly).unwrap();
    assert_eq!(ev.outcomes[0].error, Some(Category::Ambiguous));
    let ev = evaluate(&SlistEngine::default(), &doc, AmbigMode::WrongOnly).unwrap();
    assert_eq!(ev.outcomes[0].error, Some(Category::Strategic));
}

#[test]
fn strict_mode_counts_lucky_tie_breaks() {
    let doc = fixture("example5");
    let engine = BfpEngine::new(TieBreak::Recency);
    let lenient = evaluate(&engine, &doc, AmbigMode::WrongOnly).unwrap();
    assert_eq!(lenient.table.correct, 1);
    let strict = evaluate(&engine, &doc, AmbigMode::Strict).unwrap();
    assert_eq!(strict.table.wrong_ambiguous, 1);
}

#[test]
fn gold_flags_route_to_other() {
    for (flag, reason) in [("event", OtherReason::EventAnaphora), ("split", OtherReason::SplitAntecedent)] {
        let mut json = mini_json("Anna{name,f,Anna,s} sang . Bo{name,m,Bo,s} danced . It{pro,n,Anna,s} was fun .");
        json["markables"][2]["flags"] = serde_json::json!({ flag: true });
        let doc = slist_anaphora::load_document(json.to_string().as_bytes()).unwrap();
        let ev = evaluate(&SlistEngine::default(), &doc, AmbigMode::WrongOnly).unwrap();
        assert_eq!(ev.outcomes[0].error, Some(Category::Other(reason)), "{flag}");
    }
}

#[test]
fn antecedent_beyond_the_segment_is_other() {
    let doc = mini("Anna{name,f,Anna,s} slept . || Max{name,m,Max,s} smiled . She{pro,f,Anna,s} left .");
    let ev = evaluate(&SlistEngine::default(), &doc, AmbigMode::WrongOnly).unwrap();
    assert_eq!(ev.outcomes[0].error, Some(Category::Other(OtherReason::SegmentBoundary)));
}

#[test]
fn intra_sentential_gold_is_intra_for_centering_only() {
    let doc = mini("Maria{name,f,Maria,s} slept . Anna{name,f,Anna,x} said she{pro,f,Anna,s} won .");
    let slist = evaluate(&SlistEngine::default(), &doc, AmbigMode::WrongOnly).unwrap();
    let bfp = evaluate(&BfpEngine::new(TieBreak::CfRank), &doc, AmbigMode::WrongOnly).unwrap();
    if let Some(c) = slist.outcomes[0].error {
        assert_eq!(c, Category::Strategic);
    }
    assert_eq!(bfp.outcomes[0].system.to_string(), "Maria");
    assert_eq!(bfp.outcomes[0].error, Some(Category::Intra));
}

#[test]
fn unknown_markable_is_an_error() {
    let doc = fixture("example1");
    let mut run = SlistEngine::default().run(&doc);
    run.records[0].anaphor.0 = "nobody".into();
    assert!(matches!(score(&run.records, &doc), Err(Error::UnknownMarkable(_))));
}

#[test]
fn table_lists_every_row() {
    let doc = fixture("example3");
    let ev = evaluate(&SlistEngine::default(), &doc, AmbigMode::WrongOnly).unwrap();
    let groups = [("nyt".to_owned(), ev.table)].into_iter().collect();
    let text = slist_anaphora::eval::render_table("slist", &groups);
    for row in ["Correct", "Wrong (strat.)", "Wrong (ambig.)", "Wrong (intra)", "Wrong (chain)", "Wrong (other)"] {
        assert!(text.contains(row), "{text}");
    }
    assert!(!text.contains("Total"));
}
