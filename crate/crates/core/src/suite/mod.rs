//! Regression driver: re-derives each desk-scale result as a named claim and
//! reports pass, fail or budget per claim.

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bitset::ElementSet;
use crate::catalog::{element, registry, BuiltGroup, ClassificationEntry, ClassificationReport};
use crate::error::{Error, Result};
use crate::group::{affine_gf2s, find_isomorphism, GroupTable};
use crate::ring::{identity_to_factorization, parse_identity, verify_identity};
use crate::search::{
    brute_force_oracle, chain_factorization, double_coset_factorization, find_factorization, group_adjacent, is_multifold,
    lift_by_normal_quotient, prove_no_2m2, supersolvable_witness, verify_factorization, DoubleCoset, FactorShape,
    Factorization, SearchOptions, SearchOutcome, SearchResult, Verdict,
};
use crate::structure::{
    generated_subgroup, involution_hypotheses, is_clt, is_supersolvable, subgroups_of_order_within, sylow,
    thm12_hypotheses, Quotient,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Tier {
    /// Runs by default.
    Quick,
    /// Minutes of search; runs with `Selection::All` or by id.
    Expensive,
    /// No expected answer; runs only by id.
    Exploratory,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClaimOutcome {
    Pass,
    Fail,
    Budget,
}

type Check = fn(&mut Ctx) -> Result<()>;

pub struct Claim {
    pub id: &'static str,
    pub anchor: &'static str,
    pub tier: Tier,
    check: Check,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimResult {
    pub id: String,
    pub anchor: String,
    pub tier: Tier,
    pub outcome: ClaimOutcome,
    pub details: Vec<String>,
    pub nodes: u64,
    pub millis: u64,
}

/// Claim results in selection order, plus classification entries for the
/// groups whose multifold status a claim settled.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub claims: Vec<ClaimResult>,
    pub entries: Vec<ClassificationEntry>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.claims.iter().all(|c| c.outcome == ClaimOutcome::Pass)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Selection {
    /// The quick tier.
    Default,
    /// Quick and expensive tiers.
    All,
    Ids(Vec<String>),
}

impl Selection {
    /// `all`, `default`, or a comma-separated id list (empty gives an empty
    /// selection).
    pub fn parse(text: &str) -> Selection {
        match text.trim() {
            "default" => Selection::Default,
            "all" => Selection::All,
            ids => Selection::Ids(ids.split(',').map(str::trim).filter(|s| !s.is_empty()).map(String::from).collect()),
        }
    }
}

pub fn claims() -> &'static [Claim] {
    CLAIMS
}

const CLAIMS: &[Claim] = &[
    Claim { id: "bergman-a4", anchor: "A4 has no (2,3,2)-factorization; A = {e,(14)(23)}, B = {e,(132)}, C = {e,(124),(142)} with |B| not dividing |<B>|", tier: Tier::Quick, check: bergman_a4 },
    Claim { id: "a5-2352", anchor: "A5 has no (2,3,5,2)-factorization", tier: Tier::Expensive, check: a5_2352 },
    Claim { id: "exceptional-2m2", anchor: "the eight non-multifold groups of order at most 100 have no (2,n/4,2)-factorization", tier: Tier::Quick, check: exceptional_2m2 },
    Claim { id: "lemma7-identities", anchor: "group-ring identities for the groups of orders 36, 48, 48, 72, 72, 80", tier: Tier::Quick, check: lemma7_identities },
    Claim { id: "order48-quotient", anchor: "C4^2:C3 via its normal Klein subgroup and A4 quotient", tier: Tier::Quick, check: order48_quotient },
    Claim { id: "s5-table1", anchor: "S5 is multifold via six double-coset shapes", tier: Tier::Quick, check: s5_table1 },
    Claim { id: "s4-multifold", anchor: "S4 is multifold", tier: Tier::Quick, check: s4_multifold },
    Claim { id: "supersolvable-witnesses", anchor: "supersolvable groups are multifold", tier: Tier::Quick, check: supersolvable_witnesses },
    Claim { id: "clt-boundary", anchor: "A4 is not CLT while S4 is", tier: Tier::Quick, check: clt_boundary },
    Claim { id: "gq-family", anchor: "the affine groups G(2^s) have no (2,n/4,2)-factorization", tier: Tier::Quick, check: gq_family },
    Claim { id: "order75-dcoset", anchor: "C5^2:C3 = A X B for non-conjugate subgroups of order 5", tier: Tier::Quick, check: order75_dcoset },
    Claim { id: "f3-d4-btsa", anchor: "F3^2:D4 = B T S A of shape (3,4,2,3), refined to (3,2,2,2,3)", tier: Tier::Quick, check: f3_d4_btsa },
    Claim { id: "oracle-small", anchor: "complete search agrees with brute force on every registry group of order at most 12", tier: Tier::Quick, check: oracle_small },
    Claim { id: "pmp-order72", anchor: "open: (3,8,3)-factorization of F3^2:Q8", tier: Tier::Exploratory, check: pmp_order72 },
    Claim { id: "simple-168", anchor: "open: multifold status of the simple group of order 168", tier: Tier::Exploratory, check: simple_168 },
];

/// Runs the selected claims concurrently; each gets its own copy of `opts`.
pub fn run_suite(selection: &Selection, opts: &SearchOptions) -> Result<SuiteReport> {
    let chosen: Vec<&Claim> = match selection {
        Selection::Default => CLAIMS.iter().filter(|c| c.tier == Tier::Quick).collect(),
        Selection::All => CLAIMS.iter().filter(|c| c.tier != Tier::Exploratory).collect(),
        Selection::Ids(ids) => ids
            .iter()
            .map(|id| CLAIMS.iter().find(|c| c.id == id).ok_or_else(|| Error::UnknownClaimId(id.clone())))
            .collect::<Result<_>>()?,
    };
    let results: Vec<(ClaimResult, Vec<ClassificationEntry>)> =
        chosen.par_iter().map(|c| run_claim(c, opts)).collect();
    let mut report = SuiteReport::default();
    let mut entries = Vec::new();
    for (r, e) in results {
        report.claims.push(r);
        for x in e {
            if !entries.iter().any(|y: &ClassificationEntry| y.id == x.id) {
                entries.push(x);
            }
        }
    }
    report.entries = ClassificationReport::new(entries).entries;
    Ok(report)
}

fn run_claim(c: &Claim, opts: &SearchOptions) -> (ClaimResult, Vec<ClassificationEntry>) {
    let start = Instant::now();
    let mut ctx = Ctx { opts: opts.clone(), ..Ctx::default() };
    if let Err(e) = (c.check)(&mut ctx) {
        ctx.failed = true;
        ctx.details.push(format!("error: {e}"));
    }
    let outcome = if ctx.failed {
        ClaimOutcome::Fail
    } else if ctx.budget {
        ClaimOutcome::Budget
    } else {
        ClaimOutcome::Pass
    };
    let r = ClaimResult {
        id: c.id.to_string(),
        anchor: c.anchor.to_string(),
        tier: c.tier,
        outcome,
        details: ctx.details,
        nodes: ctx.nodes,
        millis: start.elapsed().as_millis() as u64,
    };
    (r, ctx.entries)
}

#[derive(Default)]
struct Ctx {
    opts: SearchOptions,
    details: Vec<String>,
    failed: bool,
    budget: bool,
    nodes: u64,
    entries: Vec<ClassificationEntry>,
}

impl Ctx {
    fn expect(&mut self, ok: bool, what: impl Into<String>) {
        let what = what.into();
        if ok {
            self.details.push(what);
        } else {
            self.failed = true;
            self.details.push(format!("FAILED: {what}"));
        }
    }

    /// Records a search that must prove nonexistence.
    fn expect_none(&mut self, r: &SearchResult, what: &str) {
        self.nodes += r.stats.nodes;
        match r.outcome {
            SearchOutcome::None => self.details.push(format!("{what}: none ({} nodes)", r.stats.nodes)),
            SearchOutcome::Undecided => {
                self.budget = true;
                self.details.push(format!("{what}: undecided, budget exhausted"));
            }
            SearchOutcome::Found(_) => self.expect(false, format!("{what}: unexpected witness")),
        }
    }

    fn expect_factorization(&mut self, g: &GroupTable, f: &Factorization, shape: &str, what: &str) {
        let want: FactorShape = shape.parse().expect("literal shape");
        let ok = verify_factorization(g, f) && f.shape() == want.sizes();
        self.expect(ok, format!("{what}: {} {}", FactorShape::new(f.shape()).map(|s| s.to_string()).unwrap_or_default(), if ok { "verifies" } else { "does not verify" }));
    }
}

fn build(id: &str) -> Result<BuiltGroup> {
    registry().build_full(id)
}

fn elems(g: &BuiltGroup, xs: &[&str]) -> Result<Vec<usize>> {
    xs.iter().map(|x| element(g, x)).collect()
}

/// The set `{e, x}` style literal.
fn set(g: &BuiltGroup, xs: &[&str]) -> Result<ElementSet> {
    Ok(elems(g, xs)?.into_iter().collect())
}

fn gen(g: &BuiltGroup, xs: &[&str]) -> Result<ElementSet> {
    Ok(generated_subgroup(&g.table, &elems(g, xs)?))
}

fn named(id: &str, name: &str, g: &BuiltGroup) -> Result<ElementSet> {
    registry().subgroup(id, name, g)
}

fn bergman_a4(c: &mut Ctx) -> Result<()> {
    let g = build("A4")?;
    let shape: FactorShape = "2,3,2".parse()?;
    let r = find_factorization(&g.table, &shape, &c.opts)?;
    c.expect_none(&r, "search (2,3,2)");
    c.expect(brute_force_oracle(&g.table, &shape)?.is_none(), "brute force (2,3,2): none");
    let a = set(&g, &["e", "(14)(23)"])?;
    let b = set(&g, &["e", "(132)"])?;
    let cc = set(&g, &["e", "(124)", "(142)"])?;
    c.expect_factorization(&g.table, &Factorization::new(vec![a, b, cc]), "2,2,3", "A B C");
    let gen_b = generated_subgroup(&g.table, &b.to_vec()).len();
    c.expect(gen_b == 3 && !gen_b.is_multiple_of(b.len()), format!("|B| = {}, |<B>| = {gen_b}", b.len()));
    Ok(())
}

fn a5_2352(c: &mut Ctx) -> Result<()> {
    let g = build("A5")?;
    let r = find_factorization(&g.table, &"2,3,5,2".parse()?, &c.opts)?;
    c.expect_none(&r, "search (2,3,5,2)");
    Ok(())
}

fn exceptional_2m2(c: &mut Ctx) -> Result<()> {
    let ids: Vec<String> =
        registry().records.iter().filter(|r| r.tags.iter().any(|t| t == "exceptional")).map(|r| r.id.clone()).collect();
    c.expect(ids.len() == 8, format!("{} listed groups", ids.len()));
    for id in ids {
        let g = registry().build(&id)?;
        c.expect(thm12_hypotheses(&g)?, format!("{id}: involution hypotheses hold"));
        let r = prove_no_2m2(&g, &c.opts)?;
        let shape = format!("(2,{},2)", g.order() / 4);
        c.expect_none(&r, &format!("{id} {shape}"));
        if r.outcome == SearchOutcome::None {
            c.entries.push(negative_entry(&id, &g, &shape, &r));
        }
    }
    Ok(())
}

fn negative_entry(id: &str, g: &GroupTable, shape: &str, r: &SearchResult) -> ClassificationEntry {
    ClassificationEntry {
        id: id.to_string(),
        order: g.order(),
        supersolvable: is_supersolvable(g),
        multifold: "not-multifold".into(),
        failing_shape: Some(shape.to_string()),
        witnesses: Vec::new(),
        nodes: r.stats.nodes,
        millis: r.stats.millis,
    }
}

/// Bundled identities: a `# group:` and a `# shape:` header, then one factor
/// per line.
pub const IDENTITIES: &[(&str, &str)] = &[
    ("order36", include_str!("identities/order36.txt")),
    ("order48a", include_str!("identities/order48a.txt")),
    ("order48b", include_str!("identities/order48b.txt")),
    ("order72a", include_str!("identities/order72a.txt")),
    ("order72b", include_str!("identities/order72b.txt")),
    ("order80a", include_str!("identities/order80a.txt")),
    ("order80b", include_str!("identities/order80b.txt")),
];

/// The value of a `# key: value` header line.
pub fn identity_header<'a>(text: &'a str, key: &str) -> Option<&'a str> {
    text.lines()
        .filter_map(|l| l.trim().strip_prefix('#'))
        .filter_map(|l| l.trim().strip_prefix(key)?.strip_prefix(':'))
        .map(str::trim)
        .next()
}

fn lemma7_identities(c: &mut Ctx) -> Result<()> {
    for (name, text) in IDENTITIES {
        let id = identity_header(text, "group").ok_or_else(|| Error::Catalog(format!("{name}: no group header")))?;
        let shape = identity_header(text, "shape").ok_or_else(|| Error::Catalog(format!("{name}: no shape header")))?;
        let g = registry().build(id)?;
        let p = parse_identity(&g, text)?;
        let check = verify_identity(&g, &p)?;
        c.expect(check.holds, format!("{name} ({id}): identity {}", if check.holds { "holds" } else { "fails" }));
        if check.holds {
            let f = identity_to_factorization(&g, &p)?;
            c.expect_factorization(&g, &f, shape, name);
        }
    }

    // order 36: A T C over the double cosets of A = <a> and C = <ab>
    let id = "C3^2:C4";
    let g = build(id)?;
    let (a, cc, t) = (named(id, "A", &g)?, named(id, "C", &g)?, named(id, "T", &g)?);
    if let DoubleCoset::Factorization(f) = double_coset_factorization(&g.table, &a, &cc)? {
        c.expect(f.factors[1].len() == g.table.order() / 9, format!("{id}: {} double cosets of <a>, <ab>", f.factors[1].len()));
    } else {
        c.expect(false, format!("{id}: <a>, <ab> double cosets collapse"));
    }
    c.expect_factorization(&g.table, &Factorization::new(vec![a, t, cc]), "3,4,3", &format!("{id} A T C"));
    let split = Factorization::new(vec![a, set(&g, &["e", "t^2"])?, set(&g, &["e", "t"])?, cc]);
    c.expect_factorization(&g.table, &split, "3,2,2,3", &format!("{id} A {{e,t^2}} {{e,t}} C"));

    // order 48: A T B with the two Klein subgroups
    let id = "C2^4:C3";
    let g = build(id)?;
    let (a, b) = (named(id, "A", &g)?, named(id, "B", &g)?);
    let t = set(&g, &["e", "t", "t^2"])?;
    c.expect_factorization(&g.table, &Factorization::new(vec![a, t, b]), "4,3,4", &format!("{id} A T B"));
    Ok(())
}

fn order48_quotient(c: &mut Ctx) -> Result<()> {
    let id = "C4^2:C3";
    let g = build(id)?;
    let v = named(id, "V", &g)?;
    let q = Quotient::new(&g.table, &v)?;
    c.expect(find_isomorphism(&q.table, &registry().build("A4")?).is_some(), "G/V is A4");
    let r = find_factorization(&q.table, &"3,2,2".parse()?, &c.opts)?;
    c.nodes += r.stats.nodes;
    let Some(fq) = r.outcome.witness() else {
        c.expect(false, "G/V has a (3,2,2)-factorization");
        return Ok(());
    };
    let lifted = lift_by_normal_quotient(&q, fq, 0)?;
    let mut factors = vec![set(&g, &["e", "a^2"])?, set(&g, &["e", "b^2"])?];
    factors.extend_from_slice(&lifted.factors[1..]);
    c.expect_factorization(&g.table, &Factorization::new(factors), "2,2,3,2,2", "V split as <a^2><b^2>, then G/V");
    Ok(())
}

struct Row {
    shape: &'static str,
    left: Vec<ElementSet>,
    right: Vec<ElementSet>,
}

fn s5_table1(c: &mut Ctx) -> Result<()> {
    let id = "S5";
    let g = build(id)?;
    let cyc = |xs: &[&str]| gen(&g, xs);
    let two = |x: &str| set(&g, &["e", x]);
    let v = vec![two("(12)(34)")?, two("(14)(23)")?];
    let p2 = sylow(&g.table, 2)?;
    let p2_chain = chain_factorization(&g.table, &p2, &"2,2,2".parse()?)
        .ok_or_else(|| Error::Catalog("no chain in the Sylow 2-subgroup".into()))?;
    let rows = vec![
        Row { shape: "2,2,2,5,3", left: p2_chain.factors.clone(), right: vec![sylow(&g.table, 3)?] },
        Row { shape: "2,2,5,2,3", left: v.clone(), right: vec![two("(12)")?, cyc(&["(123)"])?] },
        Row { shape: "2,2,5,3,2", left: v.clone(), right: vec![cyc(&["(123)"])?, two("(12)")?] },
        Row { shape: "2,3,2,5,2", left: vec![two("(12)")?, cyc(&["(123)"])?], right: vec![cyc(&["(12345)"])?, two("(15)(24)")?] },
        Row { shape: "2,5,2,2,3", left: vec![two("(15)(24)")?, cyc(&["(12345)"])?], right: vec![two("(12)")?, cyc(&["(123)"])?] },
        Row { shape: "2,2,3,5,2", left: vec![v[0], v[1], cyc(&["(123)"])?], right: vec![two("(12)")?] },
    ];
    let checks = [
        (named(id, "V", &g)?, "V"),
        (named(id, "S3", &g)?, "S3"),
        (named(id, "D5", &g)?, "D5"),
        (named(id, "A4", &g)?, "A4"),
    ];
    for row in rows {
        let a = product_of(&g.table, &row.left);
        let b = product_of(&g.table, &row.right);
        let name = |s: &ElementSet| checks.iter().find(|(x, _)| x == s).map_or("", |(_, n)| *n);
        let exact = |parts: &[ElementSet], whole: &ElementSet| {
            parts.iter().map(ElementSet::len).product::<usize>() == whole.len()
                && verify_factorization_of(&g.table, parts, whole)
        };
        c.expect(
            exact(&row.left, &a) && exact(&row.right, &b),
            format!("({}): refinements of A{} and B{} are exact", row.shape, tag(name(&a)), tag(name(&b))),
        );
        let s = g.table.order() / (a.len() * b.len());
        match double_coset_factorization(&g.table, &a, &b)? {
            DoubleCoset::Factorization(f) => {
                c.expect(f.factors[1].len() == s, format!("({}): {} double cosets, |G|/(|A||B|) = {s}", row.shape, f.factors[1].len()));
                let mut factors = row.left.clone();
                factors.push(f.factors[1]);
                factors.extend_from_slice(&row.right);
                c.expect_factorization(&g.table, &Factorization::new(factors), row.shape, "assembled");
            }
            DoubleCoset::Refused { x } => c.expect(false, format!("({}): double coset of {} is short", row.shape, g.table.label(x))),
        }
    }
    Ok(())
}

fn tag(n: &str) -> String {
    if n.is_empty() { String::new() } else { format!(" = {n}") }
}

fn product_of(g: &GroupTable, parts: &[ElementSet]) -> ElementSet {
    parts.iter().fold(ElementSet::singleton(0), |acc, p| g.product(&acc, p))
}

/// `parts` multiply to `whole` with every product distinct.
fn verify_factorization_of(g: &GroupTable, parts: &[ElementSet], whole: &ElementSet) -> bool {
    let mut acc = ElementSet::singleton(0);
    for p in parts {
        let next = g.product(&acc, p);
        if next.len() != acc.len() * p.len() {
            return false;
        }
        acc = next;
    }
    acc == *whole
}

fn s4_multifold(c: &mut Ctx) -> Result<()> {
    let g = registry().build("S4")?;
    let r = is_multifold(&g, &c.opts)?;
    c.nodes += r.stats.nodes;
    match r.verdict {
        Verdict::Multifold => c.expect(r.witnesses.len() == FactorShape::prime_shapes(24).len(), format!("S4: {} prime shapes witnessed", r.witnesses.len())),
        Verdict::NotMultifold => c.expect(false, "S4 reported not multifold"),
        Verdict::Undecided => {
            c.budget = true;
            c.details.push("S4: undecided".into());
        }
    }
    c.entries.push(ClassificationEntry::new("S4", &g, &r));
    Ok(())
}

fn supersolvable_witnesses(c: &mut Ctx) -> Result<()> {
    let mut count = 0;
    for rec in &registry().records {
        let g = registry().build(&rec.id)?;
        if !is_supersolvable(&g) {
            continue;
        }
        count += 1;
        let w = supersolvable_witness(&g)?;
        let shapes = FactorShape::prime_shapes(g.order());
        let ok = shapes.iter().all(|s| w.get(s).is_some_and(|f| verify_factorization(&g, f) && f.shape() == s.sizes()));
        c.expect(ok && is_clt(&g), format!("{}: {} shapes, CLT", rec.id, shapes.len()));
    }
    c.expect(count > 0, format!("{count} supersolvable groups"));
    Ok(())
}

fn clt_boundary(c: &mut Ctx) -> Result<()> {
    let a4 = registry().build("A4")?;
    let s4 = registry().build("S4")?;
    c.expect(!is_clt(&a4) && !is_supersolvable(&a4), "A4: not CLT, not supersolvable");
    c.expect(is_clt(&s4) && !is_supersolvable(&s4), "S4: CLT, not supersolvable");
    Ok(())
}

fn gq_family(c: &mut Ctx) -> Result<()> {
    let g4 = affine_gf2s(2)?;
    c.expect(find_isomorphism(&g4, &registry().build("A4")?).is_some(), "G(4) is isomorphic to A4");
    let g8 = affine_gf2s(3)?;
    let h = involution_hypotheses(&g8)?;
    c.expect(g8.order() == 56, format!("G(8) has order {}", g8.order()));
    c.expect(h.involutions_conjugate, "G(8): one class of involutions");
    c.expect(h.sylow2_elementary_abelian, "G(8): Sylow 2-subgroup elementary abelian");
    let r = prove_no_2m2(&g8, &c.opts)?;
    c.expect_none(&r, "G(8) (2,14,2)");
    Ok(())
}

fn order75_dcoset(c: &mut Ctx) -> Result<()> {
    let g = registry().build("C5^2:C3")?;
    let fives = subgroups_of_order_within(&g, &g.elements(), 5);
    let a = fives[0];
    let conjugate = |b: &ElementSet| (0..g.order()).any(|h| g.conjugate_set(&a, h) == *b);
    let Some(b) = fives.iter().find(|b| !conjugate(b)) else {
        c.expect(false, "two non-conjugate subgroups of order 5");
        return Ok(());
    };
    c.expect(matches!(double_coset_factorization(&g, &a, &a)?, DoubleCoset::Refused { .. }), "A X A refused");
    match double_coset_factorization(&g, &a, b)? {
        DoubleCoset::Factorization(f) => c.expect_factorization(&g, &f, "5,3,5", "A X B"),
        DoubleCoset::Refused { .. } => c.expect(false, "A X B refused"),
    }
    Ok(())
}

fn f3_d4_btsa(c: &mut Ctx) -> Result<()> {
    let id = "F3^2:D4";
    let g = build(id)?;
    let (b, t, s, a) = (named(id, "B", &g)?, named(id, "T", &g)?, named(id, "S", &g)?, named(id, "A", &g)?);
    c.expect_factorization(&g.table, &Factorization::new(vec![b, t, s, a]), "3,4,2,3", "B T S A");
    let t1 = set(&g, &["e", "r*q"])?;
    let t2 = set(&g, &["e", "r^3*q"])?;
    c.expect(verify_factorization_of(&g.table, &[t1, t2], &t), "T = {e,t1}{e,t2}");
    c.expect_factorization(&g.table, &Factorization::new(vec![b, t1, t2, s, a]), "3,2,2,2,3", "B {e,t1} {e,t2} S A");
    Ok(())
}

/// Ordered factorizations of `n` into at most `k` factors, each at least 2.
pub fn shapes_up_to(n: usize, k: usize) -> Vec<FactorShape> {
    fn go(n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<FactorShape>) {
        if n == 1 {
            if let Ok(s) = FactorShape::new(cur.clone()) {
                out.push(s);
            }
            return;
        }
        if cur.len() == k {
            return;
        }
        for d in (2..=n).filter(|d| n.is_multiple_of(*d)) {
            cur.push(d);
            go(n / d, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n == 1 {
        return vec![FactorShape::new(vec![1]).expect("trivial shape")];
    }
    go(n, k, &mut Vec::new(), &mut out);
    out
}

fn oracle_small(c: &mut Ctx) -> Result<()> {
    let mut pairs = 0;
    for rec in registry().records.iter().filter(|r| r.expected_order <= 12) {
        let g = registry().build(&rec.id)?;
        for shape in shapes_up_to(g.order(), 3) {
            let r = find_factorization(&g, &shape, &c.opts)?;
            c.nodes += r.stats.nodes;
            let oracle = brute_force_oracle(&g, &shape)?;
            pairs += 1;
            match (&r.outcome, &oracle) {
                (SearchOutcome::Found(f), Some(_)) if verify_factorization(&g, f) => {}
                (SearchOutcome::None, None) => {}
                (SearchOutcome::Undecided, _) => c.budget = true,
                _ => c.expect(false, format!("{} {shape}: search {} disagrees with brute force", rec.id, r.outcome.label())),
            }
        }
    }
    c.details.push(format!("{pairs} group/shape pairs compared"));
    Ok(())
}

fn pmp_order72(c: &mut Ctx) -> Result<()> {
    let g = registry().build("C3^2:Q8")?;
    // merging the middle of the bundled (3,2,2,2,3) identity already answers it
    let (_, text) = IDENTITIES.iter().find(|(n, _)| *n == "order72b").expect("bundled");
    let fine = identity_to_factorization(&g, &parse_identity(&g, text)?)?;
    let merged = group_adjacent(&g, &fine, &[1, 3, 1])?;
    c.expect_factorization(&g, &merged, "3,8,3", "merged identity");
    let r = find_factorization(&g, &"3,8,3".parse()?, &c.opts)?;
    c.nodes += r.stats.nodes;
    match &r.outcome {
        SearchOutcome::Found(f) => c.expect_factorization(&g, f, "3,8,3", "search"),
        SearchOutcome::None => c.expect(false, "search: no (3,8,3)-factorization"),
        SearchOutcome::Undecided => c.details.push(format!("search: undecided after {} nodes", r.stats.nodes)),
    }
    Ok(())
}

fn simple_168(c: &mut Ctx) -> Result<()> {
    let g = registry().build("GL(3,2)")?;
    let r = is_multifold(&g, &c.opts)?;
    c.nodes += r.stats.nodes;
    c.details.push(format!("{} of {} prime shapes witnessed", r.witnesses.len(), FactorShape::prime_shapes(168).len()));
    match r.verdict {
        Verdict::Multifold => {}
        Verdict::NotMultifold => c.details.push(format!("no {} factorization", r.failing_shape.as_ref().map(|s| s.to_string()).unwrap_or_default())),
        Verdict::Undecided => c.budget = true,
    }
    c.entries.push(ClassificationEntry::new("GL(3,2)", &g, &r));
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_selection_gives_empty_report() {
        let r = run_suite(&Selection::Ids(vec![]), &SearchOptions::default()).unwrap();
        assert!(r.claims.is_empty() && r.entries.is_empty());
        assert_eq!(Selection::parse(""), Selection::Ids(vec![]));
    }

    #[test]
    fn unknown_claim() {
        let sel = Selection::parse("bergman-a4,nope");
        assert_eq!(run_suite(&sel, &SearchOptions::default()).unwrap_err(), Error::UnknownClaimId("nope".into()));
    }

    #[test]
    fn claim_ids_unique() {
        let mut ids: Vec<_> = claims().iter().map(|c| c.id).collect();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), claims().len());
    }

    #[test]
    fn shapes_up_to_twelve() {
        let s: Vec<String> = shapes_up_to(12, 3).iter().map(|s| s.to_arg()).collect();
        assert_eq!(s, ["2,2,3", "2,3,2", "2,6", "3,2,2", "3,4", "4,3", "6,2", "12"]);
        assert_eq!(shapes_up_to(1, 3).len(), 1);
    }

    #[test]
    fn headers() {
        let (_, t) = IDENTITIES[1];
        assert_eq!(identity_header(t, "group"), Some("C4^2:C3"));
        assert_eq!(identity_header(t, "shape"), Some("2,2,2,3,2"));
    }
}
