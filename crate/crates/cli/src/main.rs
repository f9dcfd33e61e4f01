use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use factorforge::catalog::{
    check_tags, classify_catalog, element, emit_report, registry, BuiltGroup, Catalog, ReportFormat,
};
use factorforge::group::{cyclic, GroupTable};
use factorforge::ring::{identity_to_factorization, parse_identity, verify_identity};
use factorforge::search::{
    double_coset_factorization, find_factorization, is_multifold, DoubleCoset, FactorShape, Factorization,
    SearchOptions, SearchOutcome, Verdict,
};
use factorforge::structure::{
    center, conjugacy_classes, generated_subgroup, involution_hypotheses, is_clt, is_supersolvable, p_part,
    prime_factors, sylow,
};
use factorforge::suite::{run_suite, ClaimOutcome, Selection, SuiteReport};
use factorforge::{ElementSet, Error};

const OK: u8 = 0;
const USAGE: u8 = 1;
const INPUT: u8 = 2;
const NONE: u8 = 3;
const BUDGET: u8 = 4;

#[derive(Parser)]
#[command(name = "factorforge", version, about = "Subset factorizations of small finite groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct GroupArgs {
    /// Registry id, catalog id, or C<n>.
    group: String,
    /// JSON-lines catalog to resolve the group from instead of the registry.
    #[arg(long)]
    catalog: Option<PathBuf>,
}

#[derive(clap::Args)]
struct SearchArgs {
    /// Node budget; unset means a complete search.
    #[arg(long, env = "FACTORFORGE_BUDGET")]
    budget: Option<u64>,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

impl SearchArgs {
    fn options(&self) -> SearchOptions {
        SearchOptions { node_budget: self.budget, jobs: self.jobs.max(1) }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Dump {
    Table,
    Labels,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Build a group and print its order and generators.
    Construct {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, value_enum)]
        dump: Option<Dump>,
    },
    /// Structural summary of a group.
    Info {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        json: bool,
    },
    /// Search for a factorization of the given shape.
    Factorize {
        #[command(flatten)]
        group: GroupArgs,
        /// Comma-separated factor sizes, e.g. 2,3,2.
        #[arg(long)]
        shape: String,
        #[command(flatten)]
        search: SearchArgs,
        #[arg(long)]
        json: bool,
    },
    /// Witnesses for every ordering of the prime factors of the order.
    Multifold {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        search: SearchArgs,
        #[arg(long)]
        json: bool,
    },
    /// Decompose the group into double cosets A x B.
    Dcoset {
        #[command(flatten)]
        group: GroupArgs,
        /// Subgroup spec: sylow:<p>, gen:<x,y,..> or named:<name>.
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long)]
        json: bool,
    },
    /// Check a group-ring identity file.
    Algebra {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        identity: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Re-run the bundled claims.
    VerifyPaper {
        /// Comma-separated claim ids, `default` or `all`.
        #[arg(long, default_value = "default")]
        claims: String,
        #[command(flatten)]
        search: SearchArgs,
        #[arg(long)]
        json: bool,
    },
    /// Classify every group of a catalog.
    Classify {
        #[arg(long)]
        catalog: PathBuf,
        #[arg(long, default_value_t = 100)]
        max_order: usize,
        /// Groups classified in parallel.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, env = "FACTORFORGE_BUDGET")]
        budget: Option<u64>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Open questions with no expected answer: pmp-order72 or simple-168.
    Explore {
        target: String,
        #[command(flatten)]
        search: SearchArgs,
        #[arg(long)]
        json: bool,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure { code: INPUT, message: e.to_string() }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure { code: INPUT, message: e.to_string() }
    }
}

type Outcome = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { USAGE } else { OK });
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cmd: Command) -> Outcome {
    match cmd {
        Command::Construct { group, dump } => construct(&group, dump),
        Command::Info { group, json } => info(&group, json),
        Command::Factorize { group, shape, search, json } => factorize(&group, &shape, &search, json),
        Command::Multifold { group, search, json } => multifold(&group, &search, json),
        Command::Dcoset { group, a, b, json } => dcoset(&group, &a, &b, json),
        Command::Algebra { group, identity, json } => algebra(&group, &identity, json),
        Command::VerifyPaper { claims, search, json } => verify_paper(Selection::parse(&claims), &search, json),
        Command::Classify { catalog, max_order, jobs, budget, format, out } => {
            classify(&catalog, max_order, jobs, budget, format, out.as_deref())
        }
        Command::Explore { target, search, json } => {
            if !matches!(target.as_str(), "pmp-order72" | "simple-168") {
                return Err(Failure { code: USAGE, message: format!("unknown target `{target}`") });
            }
            verify_paper(Selection::Ids(vec![target]), &search, json)
        }
    }
}

struct Resolved {
    catalog: Option<Catalog>,
    id: String,
    built: BuiltGroup,
}

impl Resolved {
    fn table(&self) -> &GroupTable {
        &self.built.table
    }

    fn catalog(&self) -> &Catalog {
        self.catalog.as_ref().unwrap_or_else(|| registry())
    }
}

fn resolve(args: &GroupArgs) -> Result<Resolved, Failure> {
    let catalog = args.catalog.as_ref().map(Catalog::load).transpose()?;
    let cat = catalog.as_ref().unwrap_or_else(|| registry());
    if let Some(rec) = cat.get(&args.group) {
        let id = rec.id.clone();
        let built = cat.build_full(&id)?;
        return Ok(Resolved { catalog, id, built });
    }
    if let Some(n) = args.group.strip_prefix('C').and_then(|d| d.parse::<usize>().ok()) {
        let built = BuiltGroup::from_table(cyclic(n)?);
        return Ok(Resolved { catalog, id: args.group.clone(), built });
    }
    Err(Error::UnknownName(args.group.clone()).into())
}

/// `sylow:<p>`, `gen:<x,y,..>` (element indices, labels or words) or
/// `named:<name>`.
fn subgroup_spec(r: &Resolved, spec: &str) -> Result<ElementSet, Failure> {
    let g = r.table();
    let bad = |m: String| Failure { code: INPUT, message: m };
    let (kind, arg) = spec.split_once(':').ok_or_else(|| bad(format!("subgroup spec `{spec}` has no kind")))?;
    match kind {
        "sylow" => {
            let p = arg.parse::<usize>().map_err(|_| bad(format!("bad prime `{arg}`")))?;
            Ok(sylow(g, p)?)
        }
        "gen" => {
            let mut xs = Vec::new();
            for tok in arg.split(',').map(str::trim).filter(|t| !t.is_empty()) {
                let x = match tok.parse::<usize>() {
                    Ok(i) if i < g.order() => i,
                    Ok(i) => return Err(bad(format!("element index {i} out of range"))),
                    Err(_) => element(&r.built, tok)?,
                };
                xs.push(x);
            }
            Ok(generated_subgroup(g, &xs))
        }
        "named" => Ok(r.catalog().subgroup(&r.id, arg, &r.built)?),
        other => Err(bad(format!("unknown subgroup kind `{other}`"))),
    }
}

fn print_json(v: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("json value"));
}

fn fmt_set(g: &GroupTable, s: &ElementSet) -> String {
    let items: Vec<&str> = s.iter().map(|x| g.label(x)).collect();
    format!("{{{}}}", items.join(", "))
}

fn factorization_json(g: &GroupTable, f: &Factorization) -> serde_json::Value {
    json!({ "factors": f.labelled(g), "indices": f.factors, "digest": f.digest() })
}

fn construct(args: &GroupArgs, dump: Option<Dump>) -> Outcome {
    let r = resolve(args)?;
    let g = r.table();
    println!("{}: order {}", r.id, g.order());
    for (name, x) in g.generators() {
        println!("  {name} = {}", g.label(*x));
    }
    match dump {
        Some(Dump::Labels) => {
            for (i, l) in g.labels().iter().enumerate() {
                println!("{i}\t{l}");
            }
        }
        Some(Dump::Table) => {
            for row in g.table() {
                println!("{}", row.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "));
            }
        }
        None => {}
    }
    Ok(OK)
}

fn info(args: &GroupArgs, as_json: bool) -> Outcome {
    let r = resolve(args)?;
    let g = r.table();
    let n = g.order();
    let mut classes: Vec<usize> = conjugacy_classes(g).iter().map(|c| c.len()).collect();
    classes.sort_unstable();
    let mut primes = prime_factors(n);
    primes.dedup();
    let sylows: Vec<(usize, usize)> = primes.into_iter().map(|p| (p, p_part(n, p))).collect();
    let hyp = if n % 2 == 0 { Some(involution_hypotheses(g)?) } else { None };
    let tags = r.catalog().get(&r.id).map(|rec| check_tags(g, &rec.tags)).transpose()?.unwrap_or_default();
    let v = json!({
        "id": r.id,
        "order": n,
        "abelian": g.is_abelian(),
        "class_sizes": classes,
        "center_order": center(g).len(),
        "sylow_orders": sylows.iter().map(|(p, q)| json!({"p": p, "order": q})).collect::<Vec<_>>(),
        "supersolvable": is_supersolvable(g),
        "clt": is_clt(g),
        "thm12_hypotheses": hyp.is_some_and(|h| h.all()),
        "involution_hypotheses": hyp,
        "tag_checks": tags,
    });
    if as_json {
        print_json(&v);
    } else {
        println!("{}: order {n}", r.id);
        println!("class sizes: {classes:?}");
        println!("center order: {}", center(g).len());
        for (p, q) in &sylows {
            println!("Sylow {p}-subgroup order: {q}");
        }
        println!("supersolvable: {}", is_supersolvable(g));
        println!("CLT: {}", is_clt(g));
        println!("thm12-hypotheses: {}", hyp.is_some_and(|h| h.all()));
        for t in tags.iter().filter(|t| !t.holds) {
            println!("warning: tag `{}` does not hold", t.tag);
        }
    }
    Ok(OK)
}

fn factorize(args: &GroupArgs, shape_arg: &str, search: &SearchArgs, as_json: bool) -> Outcome {
    let r = resolve(args)?;
    let g = r.table();
    let shape: FactorShape = shape_arg.parse()?;
    let res = find_factorization(g, &shape, &search.options())?;
    let (code, line) = match &res.outcome {
        SearchOutcome::Found(_) => (OK, format!("found {shape}-factorization")),
        SearchOutcome::None => (NONE, format!("no {shape}-factorization")),
        SearchOutcome::Undecided => (BUDGET, format!("undecided: budget exhausted after {} nodes", res.stats.nodes)),
    };
    if as_json {
        print_json(&json!({
            "group": r.id,
            "order": g.order(),
            "shape": shape_arg,
            "outcome": res.outcome.label(),
            "witness": res.outcome.witness().map(|f| factorization_json(g, f)),
            "stats": res.stats,
        }));
    } else {
        println!("{line}");
        if let Some(f) = res.outcome.witness() {
            for a in &f.factors {
                println!("  {}", fmt_set(g, a));
            }
        }
    }
    Ok(code)
}

fn multifold(args: &GroupArgs, search: &SearchArgs, as_json: bool) -> Outcome {
    let r = resolve(args)?;
    let g = r.table();
    let rep = is_multifold(g, &search.options())?;
    let code = if rep.verdict == Verdict::Undecided { BUDGET } else { OK };
    if as_json {
        let witnesses: Vec<_> = rep
            .witnesses
            .iter()
            .map(|w| {
                let mut v = factorization_json(g, &w.factorization);
                v["shape"] = json!(w.shape);
                v["method"] = json!(w.method);
                v
            })
            .collect();
        print_json(&json!({
            "group": r.id,
            "order": g.order(),
            "verdict": rep.verdict,
            "failing_shape": rep.failing_shape,
            "witnesses": witnesses,
            "stats": rep.stats,
        }));
    } else {
        let verdict = match rep.verdict {
            Verdict::Multifold => "multifold".to_string(),
            Verdict::NotMultifold => format!("not multifold: no {}-factorization", rep.failing_shape.as_ref().expect("failing shape")),
            Verdict::Undecided => format!("undecided: budget exhausted at {}", rep.failing_shape.as_ref().expect("failing shape")),
        };
        println!("{}: {verdict}", r.id);
        for w in &rep.witnesses {
            let sets: Vec<String> = w.factorization.factors.iter().map(|a| fmt_set(g, a)).collect();
            println!("  {} [{:?}] {}", w.shape, w.method, sets.join(" "));
        }
    }
    Ok(code)
}

fn dcoset(args: &GroupArgs, a_spec: &str, b_spec: &str, as_json: bool) -> Outcome {
    let r = resolve(args)?;
    let g = r.table();
    let a = subgroup_spec(&r, a_spec)?;
    let b = subgroup_spec(&r, b_spec)?;
    match double_coset_factorization(g, &a, &b)? {
        DoubleCoset::Factorization(f) => {
            if as_json {
                print_json(&json!({"group": r.id, "decomposition": factorization_json(g, &f)}));
            } else {
                println!("{} double cosets, shape {:?}", f.factors[1].len(), f.shape());
                for s in &f.factors {
                    println!("  {}", fmt_set(g, s));
                }
            }
            Ok(OK)
        }
        DoubleCoset::Refused { x } => {
            if as_json {
                print_json(&json!({"group": r.id, "refused": g.label(x)}));
            } else {
                println!("refused: A x B with x = {} has fewer than |A||B| elements", g.label(x));
            }
            Ok(NONE)
        }
    }
}

fn algebra(args: &GroupArgs, path: &Path, as_json: bool) -> Outcome {
    let r = resolve(args)?;
    let g = r.table();
    let text = std::fs::read_to_string(path)?;
    let p = parse_identity(g, &text)?;
    let check = verify_identity(g, &p)?;
    let f = check.holds.then(|| identity_to_factorization(g, &p)).transpose()?;
    if as_json {
        print_json(&json!({
            "group": r.id,
            "holds": check.holds,
            "mismatch": check.mismatch.map(|(x, c)| json!({"element": g.label(x), "coefficient": c})),
            "factorization": f.as_ref().map(|f| factorization_json(g, f)),
        }));
    } else if let Some(f) = &f {
        println!("identity holds; factorization of shape {:?}", f.shape());
        for s in &f.factors {
            println!("  {}", fmt_set(g, s));
        }
    } else if let Some((x, c)) = check.mismatch {
        println!("identity fails: coefficient of {} is {c}", g.label(x));
    } else {
        println!("identity fails: a factor has coefficients other than 0 and 1");
    }
    Ok(if check.holds { OK } else { NONE })
}

fn suite_code(r: &SuiteReport) -> u8 {
    if r.claims.iter().any(|c| c.outcome == ClaimOutcome::Fail) {
        INPUT
    } else if r.claims.iter().any(|c| c.outcome == ClaimOutcome::Budget) {
        BUDGET
    } else {
        OK
    }
}

fn verify_paper(sel: Selection, search: &SearchArgs, as_json: bool) -> Outcome {
    let report = run_suite(&sel, &search.options()).map_err(|e| match e {
        Error::UnknownClaimId(_) => Failure { code: USAGE, message: e.to_string() },
        other => other.into(),
    })?;
    if as_json {
        print_json(&serde_json::to_value(&report).expect("serializable"));
    } else {
        for c in &report.claims {
            let tag = match c.outcome {
                ClaimOutcome::Pass => "PASS",
                ClaimOutcome::Fail => "FAIL",
                ClaimOutcome::Budget => "BUDGET",
            };
            println!("{tag:<6} {:<24} {}", c.id, c.anchor);
            for d in &c.details {
                println!("         {d}");
            }
        }
    }
    Ok(suite_code(&report))
}

fn classify(
    path: &Path,
    max_order: usize,
    jobs: usize,
    budget: Option<u64>,
    format: Format,
    out: Option<&Path>,
) -> Outcome {
    let catalog = Catalog::load(path)?;
    let report = classify_catalog(&catalog, max_order, &SearchOptions::with_budget(budget), jobs)?;
    let fmt = match format {
        Format::Json => ReportFormat::Json,
        Format::Csv => ReportFormat::Csv,
        Format::Text => ReportFormat::Text,
    };
    let bytes = emit_report(&report, fmt);
    match out {
        Some(p) => std::fs::write(p, &bytes)?,
        None => print!("{}", String::from_utf8_lossy(&bytes)),
    }
    let undecided = report.entries.iter().filter(|e| e.multifold == "undecided").count();
    if undecided > 0 {
        eprintln!("{undecided} group(s) undecided within the budget");
        return Ok(BUDGET);
    }
    Ok(OK)
}
