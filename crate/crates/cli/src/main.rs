//! `tyd`: exact computations with 3-cocycles on finite abelian groups,
//! twisted Yetter-Drinfeld modules, Nichols-algebra Hilbert data, and
//! truncated biproducts.
//!
//! Exit codes: 0 = computed answer (including negative classifications and
//! unknown-at-cutoff verdicts), 1 = mathematical refusal (a well-formed
//! input rejected on mathematical grounds, e.g. nondiagonal summands or a
//! failed verification), 2 = input error (bad JSON, schema violations,
//! unknown fixtures, usage errors).

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::Value;

use twisted_yd::boson::{biproduct_build, braided_from_module, verify_coquasi, coinvariant_roundtrip};
use twisted_yd::cocycles::{
    is_abelian, representatives, tilde_phi_exp, verify_3cocycle, CocycleData, CocycleFailure,
};
use twisted_yd::groups::{Elem, GroupSpec};
use twisted_yd::nichols::{
    diagonal_finiteness, dynkin, hilbert_series, finiteness_simple, reduce_and_compute,
    DynkinDiagram, ReduceOptions, ReduceOutcome,
};
use twisted_yd::yd::YDModule;

use twisted_yd_cli::json::{self, parse_job, resolve_fixture, Job, ModuleRef, OutputFormat, FIXTURE_NAMES};
use twisted_yd_cli::report::{self, obj, print_json};

#[derive(Parser)]
#[command(
    name = "tyd",
    version,
    about = "Exact arithmetic for 3-cocycles, twisted Yetter-Drinfeld modules, Nichols-algebra Hilbert data, and truncated biproducts over finite abelian groups"
)]
struct Cli {
    /// Emit every canonical-representative 3-cocycle on the group with the
    /// given comma-separated cyclic factor orders as a JSON array, then exit.
    #[arg(long, value_name = "ORDERS")]
    seed_corpus: Option<String>,

    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Args)]
struct JobArgs {
    /// Path to a JSON job file.
    job: PathBuf,
    /// Emit the JSON report regardless of the job's format parameter.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// 3-cocycle checks.
    Cocycle {
        #[command(subcommand)]
        sub: CocycleCmd,
    },
    /// Classify the simple twisted Yetter-Drinfeld modules at a degree.
    Simples {
        #[command(flatten)]
        job: JobArgs,
        /// Degree as comma-separated coordinates, overriding the job file.
        #[arg(long, value_name = "COORDS")]
        degree: Option<String>,
    },
    /// Nichols-algebra computations.
    Nichols {
        #[command(subcommand)]
        sub: NicholsCmd,
    },
    /// Finiteness decision: the C1/C2 criterion for a simple nondiagonal
    /// module, or the root-of-unity criterion for a raw diagonal braiding.
    Finiteness {
        #[command(flatten)]
        job: JobArgs,
    },
    /// Truncated biproduct construction and axiom checking.
    Boson {
        #[command(subcommand)]
        sub: BosonCmd,
    },
    /// Run the end-to-end pipeline on a named fixture.
    PaperExamples {
        /// Fixture name.
        name: String,
        /// Emit the JSON report.
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum CocycleCmd {
    /// Check normalization and the 3-cocycle identity exhaustively.
    Verify {
        #[command(flatten)]
        job: JobArgs,
    },
    /// Decide whether the cocycle is abelian (all derived 2-cochains
    /// symmetric), reporting a witness when it is not.
    Abelian {
        #[command(flatten)]
        job: JobArgs,
    },
}

#[derive(Subcommand)]
enum NicholsCmd {
    /// Graded dimensions of the Nichols algebra, via the reduction pipeline
    /// for a module or directly for a raw diagonal braiding.
    Hilbert {
        #[command(flatten)]
        job: JobArgs,
    },
    /// Generalized Dynkin diagram of the diagonal braiding.
    Dynkin {
        #[command(flatten)]
        job: JobArgs,
        /// Emit Graphviz DOT instead of a report.
        #[arg(long)]
        dot: bool,
    },
}

#[derive(Subcommand)]
enum BosonCmd {
    /// Build the truncated biproduct tables and report their shape.
    Build {
        #[command(flatten)]
        job: JobArgs,
    },
    /// Build the biproduct and check the coquasi-Hopf axioms on it.
    Check {
        #[command(flatten)]
        job: JobArgs,
    },
}

/// What a handler produced: a report to print and whether it is a refusal.
struct Outcome {
    report: report::Report,
    refusal: bool,
}

impl Outcome {
    fn pass(text: String, json: Value) -> Self {
        Outcome { report: report::Report { text, json }, refusal: false }
    }
    fn refuse(text: String, json: Value) -> Self {
        Outcome { report: report::Report { text, json }, refusal: true }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok((outcome, format)) => {
            let rendered = match format {
                OutputFormat::Json => print_json(&outcome.report.json),
                OutputFormat::Text => outcome.report.text.clone(),
            };
            print!("{}", rendered);
            if outcome.refusal {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {:#}", e);
            ExitCode::from(2)
        }
    }
}

fn dispatch(cli: Cli) -> Result<(Outcome, OutputFormat)> {
    if let Some(orders) = &cli.seed_corpus {
        if cli.command.is_some() {
            return Err(anyhow!("--seed-corpus does not combine with a subcommand"));
        }
        return Ok((cmd_seed_corpus(orders)?, OutputFormat::Json));
    }
    let command = cli.command.ok_or_else(|| anyhow!("a subcommand is required (see --help)"))?;
    match command {
        Command::Cocycle { sub } => match sub {
            CocycleCmd::Verify { job } => with_job(&job, cmd_cocycle_verify),
            CocycleCmd::Abelian { job } => with_job(&job, cmd_cocycle_abelian),
        },
        Command::Simples { job, degree } => {
            with_job(&job, |j| cmd_simples(j, degree.as_deref()))
        }
        Command::Nichols { sub } => match sub {
            NicholsCmd::Hilbert { job } => with_job(&job, cmd_nichols_hilbert),
            NicholsCmd::Dynkin { job, dot } => with_job(&job, |j| cmd_nichols_dynkin(j, dot)),
        },
        Command::Finiteness { job } => with_job(&job, cmd_finiteness),
        Command::Boson { sub } => match sub {
            BosonCmd::Build { job } => with_job(&job, |j| cmd_boson(j, false)),
            BosonCmd::Check { job } => with_job(&job, |j| cmd_boson(j, true)),
        },
        Command::PaperExamples { name, json } => {
            let outcome = cmd_paper_examples(&name)?;
            let format = if json { OutputFormat::Json } else { OutputFormat::Text };
            Ok((outcome, format))
        }
    }
}

fn with_job(
    args: &JobArgs,
    f: impl FnOnce(&Job) -> Result<Outcome>,
) -> Result<(Outcome, OutputFormat)> {
    let raw = std::fs::read_to_string(&args.job)
        .with_context(|| format!("cannot read job file {}", args.job.display()))?;
    let value: Value = serde_json::from_str(&raw)
        .with_context(|| format!("job file {} is not valid JSON", args.job.display()))?;
    let job = parse_job(&value)?;
    let format = if args.json { OutputFormat::Json } else { job.params.format };
    let outcome = f(&job)?;
    Ok((outcome, format))
}

fn job_cocycle(job: &Job) -> Result<CocycleData> {
    let spec = job
        .cocycle
        .clone()
        .ok_or_else(|| anyhow!("at $.cocycle: this command requires a cocycle"))?;
    Ok(CocycleData::Rep(spec))
}

/// Resolve the job's module and verify it before any computation.  A
/// verification failure is a refusal, reported through `Err(Outcome)` so
/// callers can short-circuit with exit status 1.
fn job_module(job: &Job) -> Result<std::result::Result<YDModule, Outcome>> {
    let reference = job
        .module
        .as_ref()
        .ok_or_else(|| anyhow!("at $.module: this command requires a module"))?;
    let module = match reference {
        ModuleRef::Fixture(name) => {
            resolve_fixture(name).expect("fixture names are validated at parse time")
        }
        ModuleRef::Inline(m) => m.clone(),
    };
    if let Err(msg) = module.verify() {
        let text = format!("refusal: module verification failed\n  {}\n", msg);
        let json = obj(vec![
            ("refusal", Value::from("module verification failed")),
            ("detail", Value::from(msg.as_str())),
        ]);
        return Ok(Err(Outcome::refuse(text, json)));
    }
    Ok(Ok(module))
}

fn reduce_opts(job: &Job) -> ReduceOptions {
    ReduceOptions {
        cutoff: job.params.cutoff,
        budget_rows: job.params.budget_rows,
        force_cover: job.params.force_cover,
        solver_variant: job.params.solver,
        track_multidegree: false,
    }
}

fn cmd_cocycle_verify(job: &Job) -> Result<Outcome> {
    let data = job_cocycle(job)?;
    let group = data.group().clone();
    let size = group.size();
    let quads = size.pow(4);
    match verify_3cocycle(&data) {
        Ok(()) => {
            let text = format!(
                "3-cocycle verification: PASS\nidentity checked at {} argument quadruples; normalization at all triples with an identity argument\n",
                quads
            );
            let json = obj(vec![
                ("command", Value::from("cocycle-verify")),
                ("group_orders", orders_value(&group)),
                ("root_order", Value::from(data.root_order())),
                ("pass", Value::from(true)),
                ("identity_quadruples", Value::from(quads)),
            ]);
            Ok(Outcome::pass(text, json))
        }
        Err(failure) => {
            let (kind, args): (&str, Vec<&Elem>) = match &failure {
                CocycleFailure::NotNormalized { args } => ("normalization", args.iter().collect()),
                CocycleFailure::IdentityFails { args } => ("identity", args.iter().collect()),
            };
            let arg_text: Vec<String> = args.iter().map(|e| report::elem_text(e)).collect();
            let text = format!(
                "3-cocycle verification: FAIL\n{} fails at ({})\n",
                kind,
                arg_text.join(", ")
            );
            let json = obj(vec![
                ("command", Value::from("cocycle-verify")),
                ("group_orders", orders_value(&group)),
                ("pass", Value::from(false)),
                ("failed_axiom", Value::from(kind)),
                (
                    "witness",
                    Value::Array(args.iter().map(|e| json::elem_value(e)).collect()),
                ),
            ]);
            Ok(Outcome::refuse(text, json))
        }
    }
}

fn cmd_cocycle_abelian(job: &Job) -> Result<Outcome> {
    let data = job_cocycle(job)?;
    let group = data.group().clone();
    let abelian = is_abelian(&data);
    let witness = if abelian {
        None
    } else {
        let n = data.root_order() as i64;
        let elems = group.elems();
        let mut found = None;
        'outer: for g in &elems {
            for x in &elems {
                for y in &elems {
                    let fwd = tilde_phi_exp(&data, g, x, y);
                    let rev = tilde_phi_exp(&data, g, y, x);
                    if (fwd - rev).rem_euclid(n) != 0 {
                        found = Some((g.clone(), x.clone(), y.clone()));
                        break 'outer;
                    }
                }
            }
        }
        found
    };
    let mut text = format!("abelian: {}\n", abelian);
    let mut entries = vec![
        ("command", Value::from("cocycle-abelian")),
        ("group_orders", orders_value(&group)),
        ("abelian", Value::from(abelian)),
    ];
    if let Some((g, x, y)) = &witness {
        text.push_str(&format!(
            "witness: the 2-cochain derived at degree {} distinguishes {} vs {}\n",
            report::elem_text(g),
            report::elem_text(x),
            report::elem_text(y)
        ));
        entries.push((
            "witness",
            obj(vec![
                ("degree", json::elem_value(g)),
                (
                    "asymmetric_pair",
                    Value::Array(vec![json::elem_value(x), json::elem_value(y)]),
                ),
            ]),
        ));
    }
    Ok(Outcome::pass(text, obj(entries)))
}

fn parse_degree_flag(s: &str, group: &GroupSpec) -> Result<Elem> {
    let orders = group.orders();
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != orders.len() {
        return Err(anyhow!(
            "--degree expects {} comma-separated coordinates, found {}",
            orders.len(),
            parts.len()
        ));
    }
    let mut out = Vec::with_capacity(parts.len());
    for (i, part) in parts.iter().enumerate() {
        let c: u32 = part
            .trim()
            .parse()
            .map_err(|_| anyhow!("--degree component {:?} is not an integer", part))?;
        if c >= orders[i] {
            return Err(anyhow!("--degree coordinate {} must be < {}", c, orders[i]));
        }
        out.push(c);
    }
    Ok(out)
}

fn cmd_simples(job: &Job, degree_flag: Option<&str>) -> Result<Outcome> {
    let data = job_cocycle(job)?;
    let group = data.group().clone();
    let degree: Elem = match degree_flag {
        Some(s) => parse_degree_flag(s, &group)?,
        None => match &job.params.degree {
            Some(d) => {
                let orders = group.orders();
                if d.len() != orders.len() {
                    return Err(anyhow!(
                        "at $.params.degree: expected {} coordinates, found {}",
                        orders.len(),
                        d.len()
                    ));
                }
                for (i, &c) in d.iter().enumerate() {
                    if c >= orders[i] {
                        return Err(anyhow!(
                            "at $.params.degree[{}]: coordinate must be < {}, found {}",
                            i,
                            orders[i],
                            c
                        ));
                    }
                }
                d.clone()
            }
            None => return Err(anyhow!("a degree is required (--degree or $.params.degree)")),
        },
    };
    let sims = YDModule::simples_at(&data, &degree);
    let count = sims.len() as u64;
    let dim = sims.first().map(|m| m.total_dim() as u64).unwrap_or(0);
    let self_action: Vec<Value> = sims
        .iter()
        .map(|m| {
            let comp = &m.components[0];
            let idx = m.group.index_of(&comp.degree);
            match comp.action[idx].as_scalar_multiple_of_identity() {
                Some(s) => json::scalar_value(&s),
                None => Value::Null,
            }
        })
        .collect();
    let text = format!(
        "simple modules at degree {}: {} of dimension {}\ngroup order {} = {} x {}^2\nself-action of the degree: {}\n",
        report::elem_text(&degree),
        count,
        dim,
        group.size(),
        count,
        dim,
        sims.iter()
            .map(|m| {
                let comp = &m.components[0];
                let idx = m.group.index_of(&comp.degree);
                match comp.action[idx].as_scalar_multiple_of_identity() {
                    Some(s) => report::scalar_text(&s),
                    None => "nonscalar".to_string(),
                }
            })
            .collect::<Vec<_>>()
            .join(", ")
    );
    let json_report = obj(vec![
        ("command", Value::from("simples")),
        ("group_orders", orders_value(&group)),
        ("degree", json::elem_value(&degree)),
        ("count", Value::from(count)),
        ("dimension", Value::from(dim)),
        ("group_order", Value::from(group.size())),
        ("self_action", Value::Array(self_action)),
        ("diagonal_type", Value::from(dim == 1)),
    ]);
    Ok(Outcome::pass(text, json_report))
}

fn cmd_nichols_hilbert(job: &Job) -> Result<Outcome> {
    if let Some(q) = &job.braiding {
        let data = hilbert_series(q, job.params.cutoff, job.params.budget_rows, false);
        let dims: Vec<String> = data.dims.iter().map(|d| d.to_string()).collect();
        let text = format!(
            "diagonal braiding: {} letters at root order {}\nhilbert dims: [{}]\nverdict: {}\n",
            q.dim,
            q.n_root,
            dims.join(", "),
            report::verdict_text(&data.verdict)
        );
        let json_report = obj(vec![
            ("command", Value::from("nichols-hilbert")),
            ("braiding", report::braiding_value(q)),
            ("hilbert", report::hilbert_value(&data)),
        ]);
        return Ok(Outcome::pass(text, json_report));
    }
    let module = match job_module(job)? {
        Ok(m) => m,
        Err(refusal) => return Ok(refusal),
    };
    match reduce_and_compute(&module, &reduce_opts(job)) {
        ReduceOutcome::Report(r) => {
            let text = report::nichols_report_text(&r);
            let json_report = obj(vec![
                ("command", Value::from("nichols-hilbert")),
                ("report", report::nichols_report_value(&r)),
            ]);
            Ok(Outcome::pass(text, json_report))
        }
        ReduceOutcome::Refusal { witnesses } => Ok(Outcome::refuse(
            report::refusal_text(&witnesses),
            obj(vec![
                ("command", Value::from("nichols-hilbert")),
                ("report", report::refusal_value(&witnesses)),
            ]),
        )),
    }
}

fn dynkin_outcome(d: &DynkinDiagram, dot: bool, command: &str) -> Outcome {
    if dot {
        let dot_text = d.to_dot();
        let json_report = obj(vec![
            ("command", Value::from(command)),
            ("dot", Value::from(dot_text.as_str())),
        ]);
        return Outcome::pass(dot_text, json_report);
    }
    let mut text = String::from("dynkin:\n");
    for line in d.to_text().lines() {
        text.push_str(&format!("  {}\n", line));
    }
    text.push_str(&format!(
        "dynkin class: {}\ncomponents: {}\n",
        d.canonical_class(),
        d.components().len()
    ));
    let json_report = obj(vec![
        ("command", Value::from(command)),
        ("dynkin", report::dynkin_value(d)),
    ]);
    Outcome::pass(text, json_report)
}

fn cmd_nichols_dynkin(job: &Job, dot: bool) -> Result<Outcome> {
    if let Some(q) = &job.braiding {
        return Ok(dynkin_outcome(&dynkin(q), dot, "nichols-dynkin"));
    }
    let module = match job_module(job)? {
        Ok(m) => m,
        Err(refusal) => return Ok(refusal),
    };
    match reduce_and_compute(&module, &reduce_opts(job)) {
        ReduceOutcome::Report(r) => Ok(dynkin_outcome(&r.dynkin, dot, "nichols-dynkin")),
        ReduceOutcome::Refusal { witnesses } => Ok(Outcome::refuse(
            report::refusal_text(&witnesses),
            obj(vec![
                ("command", Value::from("nichols-dynkin")),
                ("report", report::refusal_value(&witnesses)),
            ]),
        )),
    }
}

fn cmd_finiteness(job: &Job) -> Result<Outcome> {
    if let Some(q) = &job.braiding {
        let data = hilbert_series(q, job.params.cutoff, job.params.budget_rows, false);
        let verdict = diagonal_finiteness(q, &data);
        let text = format!(
            "criterion: diagonal root-of-unity\nverdict: {}\n",
            report::verdict_text(&verdict)
        );
        let json_report = obj(vec![
            ("command", Value::from("finiteness")),
            ("criterion", Value::from("diagonal")),
            ("verdict", report::verdict_value(&verdict)),
        ]);
        return Ok(Outcome::pass(text, json_report));
    }
    let module = match job_module(job)? {
        Ok(m) => m,
        Err(refusal) => return Ok(refusal),
    };
    match finiteness_simple(&module) {
        Ok(v) => {
            let s = report::simple_verdict_str(v);
            let text = format!("criterion: simple nondiagonal\nverdict: {}\n", s);
            let json_report = obj(vec![
                ("command", Value::from("finiteness")),
                ("criterion", Value::from("simple-nondiagonal")),
                ("verdict", Value::from(s)),
            ]);
            Ok(Outcome::pass(text, json_report))
        }
        Err(msg) => {
            let text = format!("refusal: {}\n", msg);
            let json_report = obj(vec![
                ("command", Value::from("finiteness")),
                ("refusal", Value::from(msg.as_str())),
            ]);
            Ok(Outcome::refuse(text, json_report))
        }
    }
}

fn cmd_boson(job: &Job, check: bool) -> Result<Outcome> {
    let module = match job_module(job)? {
        Ok(m) => m,
        Err(refusal) => return Ok(refusal),
    };
    let braided = match braided_from_module(&module, job.params.trunc) {
        Ok(b) => b,
        Err(msg) => {
            let text = format!("refusal: {}\n", msg);
            let json_report = obj(vec![
                ("command", Value::from(if check { "boson-check" } else { "boson-build" })),
                ("refusal", Value::from(msg.as_str())),
            ]);
            return Ok(Outcome::refuse(text, json_report));
        }
    };
    let biproduct = match biproduct_build(&braided, &module.cocycle) {
        Ok(b) => b,
        Err(msg) => {
            let text = format!("refusal: {}\n", msg);
            let json_report = obj(vec![
                ("command", Value::from(if check { "boson-check" } else { "boson-build" })),
                ("refusal", Value::from(msg.as_str())),
            ]);
            return Ok(Outcome::refuse(text, json_report));
        }
    };
    if !check {
        let text = format!("{}\n", biproduct.summary());
        let json_report = obj(vec![
            ("command", Value::from("boson-build")),
            ("biproduct", report::biproduct_value(&biproduct)),
        ]);
        return Ok(Outcome::pass(text, json_report));
    }
    let coquasi = match verify_coquasi(&biproduct, job.params.max_len) {
        Ok(r) => r,
        Err(msg) => {
            let text = format!("refusal: {}\n", msg);
            let json_report = obj(vec![
                ("command", Value::from("boson-check")),
                ("refusal", Value::from(msg.as_str())),
            ]);
            return Ok(Outcome::refuse(text, json_report));
        }
    };
    let roundtrip = coinvariant_roundtrip(&biproduct);
    let pass = coquasi.pass() && roundtrip.is_ok();
    let roundtrip_text = match &roundtrip {
        Ok(()) => "pass".to_string(),
        Err(msg) => format!("FAIL: {}", msg),
    };
    let text = format!(
        "{}\n{}\ncoinvariant round-trip: {}\noverall: {}\n",
        biproduct.summary(),
        coquasi.summary(),
        roundtrip_text,
        if pass { "PASS" } else { "FAIL" }
    );
    let json_report = obj(vec![
        ("command", Value::from("boson-check")),
        ("biproduct", report::biproduct_value(&biproduct)),
        ("coquasi", report::coquasi_value(&coquasi)),
        ("roundtrip", Value::from(roundtrip_text.as_str())),
        ("pass", Value::from(pass)),
    ]);
    if pass {
        Ok(Outcome::pass(text, json_report))
    } else {
        Ok(Outcome::refuse(text, json_report))
    }
}

fn cmd_paper_examples(name: &str) -> Result<Outcome> {
    let module = resolve_fixture(name).ok_or_else(|| {
        anyhow!("unknown fixture {:?} (known: {})", name, FIXTURE_NAMES.join(", "))
    })?;
    if let Err(msg) = module.verify() {
        let text = format!("fixture: {}\nverification: FAIL\n  {}\n", name, msg);
        let json_report = obj(vec![
            ("command", Value::from("paper-examples")),
            ("fixture", Value::from(name)),
            ("verification", Value::from("fail")),
            ("detail", Value::from(msg.as_str())),
        ]);
        return Ok(Outcome::refuse(text, json_report));
    }
    let diagonal = module.is_diagonal();
    let finiteness = finiteness_simple(&module)
        .map(report::simple_verdict_str)
        .unwrap_or("not-applicable");
    let opts = ReduceOptions::default();
    match reduce_and_compute(&module, &opts) {
        ReduceOutcome::Report(r) => {
            let text = format!(
                "fixture: {}\nverification: pass\n{}\ndiagonal: {}\nsimple finiteness criterion: {}\n{}",
                name,
                report::module_summary_text(&module),
                diagonal,
                finiteness,
                report::nichols_report_text(&r)
            );
            let json_report = obj(vec![
                ("command", Value::from("paper-examples")),
                ("fixture", Value::from(name)),
                ("verification", Value::from("pass")),
                ("diagonal", Value::from(diagonal)),
                ("finiteness", Value::from(finiteness)),
                ("report", report::nichols_report_value(&r)),
            ]);
            Ok(Outcome::pass(text, json_report))
        }
        ReduceOutcome::Refusal { witnesses } => Ok(Outcome::refuse(
            format!(
                "fixture: {}\nverification: pass\ndiagonal: {}\n{}",
                name,
                diagonal,
                report::refusal_text(&witnesses)
            ),
            obj(vec![
                ("command", Value::from("paper-examples")),
                ("fixture", Value::from(name)),
                ("verification", Value::from("pass")),
                ("diagonal", Value::from(diagonal)),
                ("report", report::refusal_value(&witnesses)),
            ]),
        )),
    }
}

fn cmd_seed_corpus(orders_str: &str) -> Result<Outcome> {
    let mut orders = Vec::new();
    for part in orders_str.split(',') {
        let n: u32 = part
            .trim()
            .parse()
            .map_err(|_| anyhow!("--seed-corpus component {:?} is not an integer", part))?;
        if n < 2 || n > 1_000 {
            return Err(anyhow!("--seed-corpus orders must be in 2..=1000, found {}", n));
        }
        orders.push(n);
    }
    if orders.is_empty() {
        return Err(anyhow!("--seed-corpus requires at least one cyclic factor order"));
    }
    let group = GroupSpec::new(orders);
    let reps = representatives(&group);
    let array: Vec<Value> = reps.iter().map(json::cocycle_value).collect();
    let json_report = Value::Array(array);
    let text = print_json(&json_report);
    Ok(Outcome::pass(text, json_report))
}

fn orders_value(group: &GroupSpec) -> Value {
    Value::Array(group.orders().iter().map(|&o| Value::from(o)).collect())
}
