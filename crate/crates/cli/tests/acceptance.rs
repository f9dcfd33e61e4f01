//! One line per acceptance criterion. Criterion 10 needs a catalog of all
//! groups of order at most 100; pass its path in `FACTORFORGE_CATALOG`.

use std::process::Command;
use std::time::{Duration, Instant};

use factorforge::catalog::{classify_catalog, element, registry, Catalog, ClassificationReport};
use factorforge::group::{find_isomorphism, GroupTable};
use factorforge::search::{
    brute_force_oracle, find_factorization, is_multifold, prove_no_2m2, verify_factorization, Factorization,
    SearchOptions, SearchOutcome, Verdict,
};
use factorforge::structure::{generated_subgroup, thm12_hypotheses};
use factorforge::suite::{run_suite, ClaimOutcome, Selection};
use factorforge::Result;

struct Line {
    pass: bool,
    skipped: bool,
    text: String,
}

fn line(pass: bool, text: impl Into<String>) -> Line {
    Line { pass, skipped: false, text: text.into() }
}

fn secs(d: Duration) -> String {
    format!("{:.2}s", d.as_secs_f64())
}

fn claim(id: &str) -> Result<(bool, Vec<String>)> {
    let r = run_suite(&Selection::Ids(vec![id.into()]), &SearchOptions::default())?;
    let c = &r.claims[0];
    Ok((c.outcome == ClaimOutcome::Pass, c.details.clone()))
}

fn c1() -> Result<Line> {
    let a4 = registry().build("A4")?;
    let shape = "2,3,2".parse()?;
    let t = Instant::now();
    let r = find_factorization(&a4, &shape, &SearchOptions::default())?;
    let took = t.elapsed();
    let oracle = brute_force_oracle(&a4, &shape)?;
    let cli = Command::new(env!("CARGO_BIN_EXE_factorforge"))
        .args(["factorize", "A4", "--shape", "2,3,2"])
        .env_remove("FACTORFORGE_BUDGET")
        .output()?;
    let said = String::from_utf8_lossy(&cli.stdout).contains("no (2,3,2)-factorization");
    let pass = r.outcome == SearchOutcome::None && took < Duration::from_secs(1) && oracle.is_none()
        && cli.status.code() == Some(3) && said;
    Ok(line(pass, format!("A4 (2,3,2) proven none in {}, oracle agrees, CLI exit {:?}", secs(took), cli.status.code())))
}

fn c2() -> Result<Line> {
    let g = registry().build_full("A4")?;
    let set = |xs: &[&str]| -> Result<_> { xs.iter().map(|x| element(&g, x)).collect() };
    let a = set(&["e", "(14)(23)"])?;
    let b = set(&["e", "(132)"])?;
    let c = set(&["e", "(124)", "(142)"])?;
    let ok = verify_factorization(&g.table, &Factorization::new(vec![a, b, c]));
    let gen_b = generated_subgroup(&g.table, &b.to_vec()).len();
    let pass = ok && gen_b == 3 && !gen_b.is_multiple_of(b.len());
    Ok(line(pass, format!("A4 = A B C verifies: {ok}; |B| = {}, |<B>| = {gen_b}", b.len())))
}

fn c3() -> Result<Line> {
    let a5 = registry().build("A5")?;
    let t = Instant::now();
    let r = find_factorization(&a5, &"2,3,5,2".parse()?, &SearchOptions::default())?;
    let took = t.elapsed();
    let pass = r.outcome == SearchOutcome::None && took < Duration::from_secs(600);
    Ok(line(pass, format!("A5 (2,3,5,2): {} after {} nodes in {}", r.outcome.label(), r.stats.nodes, secs(took))))
}

fn c4() -> Result<Line> {
    let mut pass = true;
    let mut parts = Vec::new();
    let ids: Vec<&str> =
        registry().records.iter().filter(|r| r.tags.iter().any(|t| t == "exceptional")).map(|r| r.id.as_str()).collect();
    for id in &ids {
        let g = registry().build(id)?;
        let t = Instant::now();
        let hyp = thm12_hypotheses(&g)?;
        let r = prove_no_2m2(&g, &SearchOptions::default())?;
        let took = t.elapsed();
        let ok = hyp && r.outcome == SearchOutcome::None && took < Duration::from_secs(60);
        pass &= ok;
        parts.push(format!("{id} (2,{},2) {}", g.order() / 4, if ok { "none" } else { "FAILED" }));
    }
    pass &= ids.len() == 8;
    Ok(line(pass, format!("{} groups: {}", ids.len(), parts.join(", "))))
}

fn from_claim(id: &str, what: &str) -> Result<Line> {
    let t = Instant::now();
    let (pass, details) = claim(id)?;
    let failed: Vec<&String> = details.iter().filter(|d| d.starts_with("FAILED") || d.starts_with("error")).collect();
    let tail = if failed.is_empty() { String::new() } else { format!("; {failed:?}") };
    Ok(line(pass, format!("{what} ({} checks, {}){tail}", details.len(), secs(t.elapsed()))))
}

fn c7() -> Result<Line> {
    let s4 = registry().build("S4")?;
    let t = Instant::now();
    let r = is_multifold(&s4, &SearchOptions::default())?;
    let took = t.elapsed();
    let s4_ok = r.verdict == Verdict::Multifold && took < Duration::from_secs(60);
    let (ss_ok, ss) = claim("supersolvable-witnesses")?;
    let (clt_ok, _) = claim("clt-boundary")?;
    Ok(line(
        s4_ok && ss_ok && clt_ok,
        format!(
            "S4 multifold in {}; {}; A4 not CLT, S4 CLT: {clt_ok}",
            secs(took),
            ss.last().map(String::as_str).unwrap_or("no supersolvable groups")
        ),
    ))
}

fn c8() -> Result<Line> {
    let t = Instant::now();
    let (pass, details) = claim("oracle-small")?;
    let took = t.elapsed();
    Ok(line(pass && took < Duration::from_secs(300), format!("{} in {}", details.last().cloned().unwrap_or_default(), secs(took))))
}

/// Non-multifold isomorphism classes of `report`, matched against the
/// registry's eight.
fn match_eight(report: &ClassificationReport, cat: &Catalog) -> Result<(bool, String)> {
    let eight: Vec<GroupTable> = registry()
        .records
        .iter()
        .filter(|r| r.tags.iter().any(|t| t == "exceptional"))
        .map(|r| registry().build(&r.id))
        .collect::<Result<_>>()?;
    let mut classes: Vec<(String, GroupTable)> = Vec::new();
    for e in report.entries.iter().filter(|e| e.multifold == "not-multifold") {
        let g = cat.build(&e.id)?;
        if !classes.iter().any(|(_, h)| h.order() == g.order() && find_isomorphism(h, &g).is_some()) {
            classes.push((e.id.clone(), g));
        }
    }
    let undecided: Vec<&str> =
        report.entries.iter().filter(|e| e.multifold == "undecided").map(|e| e.id.as_str()).collect();
    let all_found = eight.iter().all(|g| classes.iter().any(|(_, h)| h.order() == g.order() && find_isomorphism(h, g).is_some()));
    let pass = all_found && classes.len() == 8 && undecided.is_empty();
    let ids: Vec<&str> = classes.iter().map(|(id, _)| id.as_str()).collect();
    Ok((pass, format!("non-multifold classes {ids:?}, undecided {undecided:?}")))
}

fn c10() -> Result<Line> {
    let t = Instant::now();
    let proxy = classify_catalog(registry(), 100, &SearchOptions::default(), 1)?;
    let (proxy_ok, proxy_msg) = match_eight(&proxy, registry())?;
    let proxy_msg = format!("bundled registry ({} groups, {}): {proxy_msg}", proxy.entries.len(), secs(t.elapsed()));
    match std::env::var("FACTORFORGE_CATALOG") {
        Ok(path) => {
            let cat = Catalog::load(&path)?;
            let budget = std::env::var("FACTORFORGE_BUDGET").ok().and_then(|b| b.parse().ok());
            let t = Instant::now();
            let report = classify_catalog(&cat, 100, &SearchOptions::with_budget(budget), 1)?;
            let (ok, msg) = match_eight(&report, &cat)?;
            Ok(line(ok && proxy_ok, format!("{path} ({} groups, {}): {msg}", report.entries.len(), secs(t.elapsed()))))
        }
        // not gated by default: without a catalog only the registry proxy runs
        Err(_) => Ok(Line {
            pass: proxy_ok,
            skipped: proxy_ok,
            text: format!("full run needs FACTORFORGE_CATALOG; {proxy_msg}"),
        }),
    }
}

fn main() {
    type Check = fn() -> Result<Line>;
    let criteria: Vec<(usize, Check)> = vec![
        (1, c1),
        (2, c2),
        (3, c3),
        (4, c4),
        (5, || from_claim("lemma7-identities", "identities of orders 36, 48, 48, 72, 72, 80 verify and convert")),
        (6, || from_claim("s5-table1", "S5 six double-coset shapes verify with recomputed counts")),
        (7, c7),
        (8, c8),
        (9, || from_claim("gq-family", "G(4) is A4; G(8) order 56, one involution class, elementary abelian Sylow 2, (2,14,2) none")),
        (10, c10),
    ];
    let mut failed = 0;
    for (n, f) in criteria {
        let l = f().unwrap_or_else(|e| line(false, format!("error: {e}")));
        failed += usize::from(!l.pass);
        let status = match (l.pass, l.skipped) {
            (true, true) => "SKIP",
            (true, false) => "PASS",
            _ => "FAIL",
        };
        println!("criterion {n:>2}: {status} {}", l.text);
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
