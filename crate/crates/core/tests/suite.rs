use factorforge::search::SearchOptions;
use factorforge::suite::{claims, run_suite, ClaimOutcome, Selection, Tier};

#[test]
fn quick_claims_pass() {
    let r = run_suite(&Selection::Default, &SearchOptions::default()).unwrap();
    let quick = claims().iter().filter(|c| c.tier == Tier::Quick).count();
    assert_eq!(r.claims.len(), quick);
    for c in &r.claims {
        assert_eq!(c.outcome, ClaimOutcome::Pass, "{}: {:#?}", c.id, c.details);
    }
    let not_multifold: Vec<&str> =
        r.entries.iter().filter(|e| e.multifold == "not-multifold").map(|e| e.id.as_str()).collect();
    assert_eq!(not_multifold, ["A4", "C2^2:C9", "C3xA4", "C2^3:C7", "A5", "C5xA4", "C7:A4", "C7xA4"]);
}

#[test]
fn outcomes_do_not_depend_on_order() {
    let ids = ["s5-table1", "bergman-a4", "clt-boundary"];
    let fwd = run_suite(&Selection::Ids(ids.iter().map(|s| s.to_string()).collect()), &SearchOptions::default())
        .unwrap();
    let rev = run_suite(
        &Selection::Ids(ids.iter().rev().map(|s| s.to_string()).collect()),
        &SearchOptions::default(),
    )
    .unwrap();
    for c in &fwd.claims {
        let d = rev.claims.iter().find(|d| d.id == c.id).unwrap();
        assert_eq!((c.outcome, &c.details), (d.outcome, &d.details));
    }
}

#[test]
fn tiny_budget_is_reported_as_budget() {
    let r = run_suite(&Selection::parse("a5-2352"), &SearchOptions::with_budget(Some(1000))).unwrap();
    assert_eq!(r.claims[0].outcome, ClaimOutcome::Budget);
}
