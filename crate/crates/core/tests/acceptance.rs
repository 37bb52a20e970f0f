//! One PASS/FAIL line per acceptance criterion. Exits non-zero on any FAIL.

mod common;

use std::collections::{HashMap, HashSet};
use std::time::{Duration, Instant};

use common::gen::*;
use common::*;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};
use slist_anaphora::centering::{
    classify_transition, filter_readings, generate_readings, rank_cf, satisfies_rule1, Prev,
};
use slist_anaphora::discourse::referring_expressions_in_order;
use slist_anaphora::slist::{precedes, Realization, TraceAction};
use slist_anaphora::{
    classify_errors, evaluate, AmbigMode, BfpEngine, Category, Engine, EntityId, RunResult,
    SList, ScoreTable, SlistEngine, Trace, TieBreak, Transition,
};

type Check = Result<(), String>;
type Golden<'a> = (&'a str, &'a [(At, State)], &'a [(&'a str, &'a str)]);
type Criterion = (&'static str, &'static str, Option<Duration>, fn() -> Check);

fn runner(cases: u32) -> TestRunner {
    let config = Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    };
    TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha))
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn golden(cases: &[Golden<'_>]) -> Check {
    let mut bad = Vec::new();
    for (name, states, resolutions) in cases {
        let run = SlistEngine::default().run(&fixture(name));
        for line in state_mismatches(slist_steps(&run), states)
            .into_iter()
            .chain(resolution_mismatches(&run, resolutions))
        {
            bad.push(format!("{name}: {line}"));
        }
    }
    ensure(bad.is_empty(), || bad.join("; "))
}

fn criterion3() -> Check {
    golden(&[("example3", EXAMPLE3, RESOLUTIONS3)])?;
    let run = SlistEngine::default().run(&fixture("example3"));
    let steps = slist_steps(&run);
    let has = |at, who: &str| state_at(steps, at).iter().any(|(e, _)| e == who);
    ensure(has(At::Upto(41), "Prosecutors") && !has(At::Upto(71), "Prosecutors"), || {
        "prosecutors not evicted in the second sentence".into()
    })?;
    let class = |at| {
        state_at(steps, at)
            .into_iter()
            .find(|(e, _)| e == "Smirga")
            .map(|(_, c)| c)
    };
    let before = class(At::FirstInsert(74));
    let after = class(At::FirstInsert(77));
    ensure(before.as_deref() == Some("BN") && after.as_deref() == Some("E"), || {
        format!("Smirga {before:?} -> {after:?}, expected BN -> E")
    })
}

fn centering_trace(run: &RunResult) -> &[slist_anaphora::centering::UtteranceTrace] {
    match &run.trace {
        Trace::Centering(u) => u,
        Trace::Slist(_) => &[],
    }
}

fn criterion4() -> Check {
    let bfp = BfpEngine::new(TieBreak::CfRank);
    let mut bad = Vec::new();
    for (name, anaphor, want) in [
        ("example1", "she_d", "Brennan"),
        ("example1_prime", "she_d2", "Friedman"),
        ("example2", "she_d", "Brennan"),
        ("example2_prime", "she_d2", "Driver"),
    ] {
        let got = bfp.run(&fixture(name)).record(anaphor).map(|r| r.system.to_string());
        if got.as_deref() != Some(want) {
            bad.push(format!("{name} {anaphor}: expected {want}, got {got:?}"));
        }
    }
    ensure(bad.is_empty(), || bad.join("; "))
}

fn criterion5() -> Check {
    let run = BfpEngine::new(TieBreak::CfRank).run(&fixture("example5"));
    let u = centering_trace(&run)
        .iter()
        .find(|u| u.markables.iter().any(|m| m == "them"))
        .ok_or("no utterance holds `them`")?;
    let retain = u
        .readings
        .iter()
        .filter(|r| r.transition == Some(Transition::Retain))
        .count();
    let flagged = run.record("them").is_some_and(|r| r.ambiguous);
    ensure(retain >= 2 && u.ambiguous && flagged, || {
        format!("{retain} RETAIN readings, utterance ambiguous {}, record ambiguous {flagged}", u.ambiguous)
    })
}

fn criterion6a() -> Check {
    let strategy = (realization(0), realization(1), realization(2));
    runner(10_000)
        .run(&strategy, |(a, b, c)| {
            prop_assert!(!precedes(&a, &a));
            prop_assert!(!(precedes(&a, &b) && precedes(&b, &a)));
            if precedes(&a, &b) && precedes(&b, &c) {
                prop_assert!(precedes(&a, &c));
            }
            if a.rank_key() != b.rank_key() {
                prop_assert!(precedes(&a, &b) || precedes(&b, &a));
            }
            Ok(())
        })
        .map_err(|e| e.to_string())
}

fn criterion6b() -> Check {
    let strategy = (prop::collection::vec((familiarity(), 0..40usize), 0..=8), 1..10usize);
    runner(1_000)
        .run(&strategy, |(specs, cap)| {
            let rs: Vec<Realization> = specs
                .iter()
                .enumerate()
                .map(|(i, (f, p))| real(i, *f, 0, p * 8 + i))
                .collect();
            let mut list = SList::new(cap);
            for r in &rs {
                list.insert(r.clone());
            }
            let want = sorted_oracle(&rs);
            prop_assert_eq!(list.items(), &want[..want.len().min(cap)]);
            Ok(())
        })
        .map_err(|e| e.to_string())
}

fn criterion6c() -> Check {
    let a = EntityId::chain("A");
    let b = EntityId::chain("B");
    let cases = [
        (&a, Some(&a), &a, Transition::Continue),
        (&a, None, &a, Transition::Continue),
        (&a, Some(&a), &b, Transition::Retain),
        (&a, None, &b, Transition::Retain),
        (&a, Some(&b), &a, Transition::SmoothShift),
        (&a, Some(&b), &b, Transition::RoughShift),
    ];
    let bad: Vec<String> = cases
        .iter()
        .filter(|(cb, prev, cp, want)| classify_transition(cb, *prev, cp) != *want)
        .map(|(cb, prev, cp, want)| format!("cb {cb} prev {prev:?} cp {cp}: expected {want}"))
        .collect();
    ensure(bad.is_empty(), || bad.join("; "))
}

fn criterion6d() -> Check {
    const NAMES: [(&str, &str); 4] = [("Anna", "f"), ("Bea", "f"), ("Carl", "m"), ("Dora", "f")];
    const ROLES: [&str; 3] = ["s", "o", "x"];
    let strategy = (
        prop::collection::vec((0..4usize, 0..3usize), 1..4),
        prop::collection::vec((0..4usize, 0..3usize, any::<bool>()), 1..4),
    );
    runner(1_000)
        .run(&strategy, |(prev, cur)| {
            let mut text = String::new();
            for (e, r) in &prev {
                let (n, g) = NAMES[*e];
                text.push_str(&format!("{n}{{name,{g},{n},{}}} ", ROLES[*r]));
            }
            text.push_str(". ");
            for (e, r, pronoun) in &cur {
                let (n, g) = NAMES[*e];
                let w = if !*pronoun { n } else if g == "f" { "she" } else { "he" };
                let form = if *pronoun { "pro" } else { "name" };
                text.push_str(&format!("{w}{{{form},{g},{n},{}}} ", ROLES[*r]));
            }
            text.push('.');
            let doc = mini(&text);
            let ms = referring_expressions_in_order(&doc);
            let p: Vec<_> = ms.iter().copied().filter(|m| doc.sentence_of(m) == 0).collect();
            let u: Vec<_> = ms.iter().copied().filter(|m| doc.sentence_of(m) == 1).collect();
            let cf = rank_cf(&doc, &p, |m| EntityId::Chain(m.chain.clone().unwrap()));
            let prev = Prev { cf: &cf, cb: None };
            let all = generate_readings(&doc, &u, Some(prev), &HashMap::new());
            for r in filter_readings(&doc, &u, Some(prev), all, &HashMap::new()) {
                prop_assert!(satisfies_rule1(&r, &cf));
            }
            Ok(())
        })
        .map_err(|e| e.to_string())
}

fn criterion6e() -> Check {
    for name in FIXTURES {
        let doc = fixture(name);
        for cap in [1, 3, 5] {
            let run = SlistEngine::new(cap).run(&doc);
            for step in slist_steps(&run).iter().filter(|s| s.action == TraceAction::Purge) {
                let range = doc.sentences[doc.tokens[step.token_index].sentence].tokens.clone();
                let text = doc.text(range.start, range.end - 1);
                if let Some(e) = step.slist.iter().find(|e| !text.contains(&e.surface)) {
                    return Err(format!("{name}: {} kept after purge of `{text}`", e.surface));
                }
            }
        }
    }
    let strategy = (
        prop::collection::vec(prop::collection::vec((0..6usize, familiarity()), 0..6), 1..5),
        1..6usize,
    );
    runner(1_000)
        .run(&strategy, |(utts, cap)| {
            let mut list = SList::new(cap);
            let mut pos = 0;
            for (u, items) in utts.iter().enumerate() {
                let mut realized = HashSet::new();
                for (e, f) in items {
                    pos += 1;
                    let r = real(*e, *f, u, pos);
                    realized.insert(r.entity.clone());
                    list.insert(r);
                }
                list.end_of_utterance(&realized);
                for r in list.items().iter().chain(list.overflow()) {
                    prop_assert!(realized.contains(&r.entity));
                }
            }
            Ok(())
        })
        .map_err(|e| e.to_string())
}

fn criterion6f() -> Check {
    for name in FIXTURES {
        let doc = fixture(name);
        for engine in engines() {
            for step in 1..=3 {
                let mut run = engine.run(&doc);
                inject_errors(&mut run, step);
                let cats = classify_errors(
                    &run.records,
                    &doc,
                    |f| engine.run_forced(&doc, f),
                    AmbigMode::WrongOnly,
                )
                .map_err(|e| e.to_string())?;
                let t = ScoreTable::from_categories(&cats);
                ensure(t.is_consistent() && t.wrong > 0, || {
                    format!("{name} {} step {step}: {t:?}", engine.algorithm())
                })?;
            }
        }
    }
    Ok(())
}

fn criterion6g() -> Check {
    let ev = evaluate(&SlistEngine::default(), &fixture("chain_error"), AmbigMode::WrongOnly)
        .map_err(|e| e.to_string())?;
    let got = ev.outcomes.iter().find(|o| o.anaphor == "she_2").and_then(|o| o.error);
    ensure(got == Some(Category::Chain), || format!("she_2 classified {got:?}"))
}

fn main() {
    let criteria: [Criterion; 12] = [
        ("1", "golden trace, example 1", Some(Duration::from_secs(1)), || {
            golden(&[
                ("example1", EXAMPLE1, RESOLUTIONS1),
                ("example1_prime", EXAMPLE1_PRIME, RESOLUTIONS1_PRIME),
            ])
        }),
        ("2", "golden trace, example 2", Some(Duration::from_secs(1)), || {
            golden(&[
                ("example2", EXAMPLE2, RESOLUTIONS2),
                ("example2_prime", EXAMPLE2_PRIME, RESOLUTIONS2_PRIME),
            ])
        }),
        ("3", "golden trace, example 3", Some(Duration::from_secs(1)), criterion3),
        ("4", "centering contrast on examples 1 and 2", None, criterion4),
        ("5", "ambiguous RETAIN readings on example 5", None, criterion5),
        ("6a", "precedes is a strict total order (10^4 triples)", None, criterion6a),
        ("6b", "insertion equals full sort (10^3 sequences)", None, criterion6b),
        ("6c", "transition grid (6 cells)", None, criterion6c),
        ("6d", "rule 1 after filtering (10^3 trials)", None, criterion6d),
        ("6e", "purge keeps only realized entities", None, criterion6e),
        ("6f", "error categories partition wrong", None, criterion6f),
        ("6g", "counterfactual chain error", None, criterion6g),
    ];

    let start = Instant::now();
    let mut failed = 0;
    for (id, what, budget, check) in criteria {
        let t0 = Instant::now();
        let mut result = check();
        let took = t0.elapsed();
        if let (Ok(()), Some(b)) = (&result, budget) {
            if took > b {
                result = Err(format!("took {took:?}, budget {b:?}"));
            }
        }
        match result {
            Ok(()) => println!("PASS {id:<3} {what} ({:.0?})", took),
            Err(e) => {
                failed += 1;
                println!("FAIL {id:<3} {what}: {e}");
            }
        }
    }
    let total = start.elapsed();
    if total > Duration::from_secs(30) {
        failed += 1;
        println!("FAIL     suite runtime {total:?} exceeds 30s");
    } else {
        println!("PASS     suite runtime {total:.0?} (budget 30s)");
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
