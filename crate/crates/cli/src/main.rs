//! `gtrel`: batch front end for relation Gelfand-Tsetlin modules.
//!
//! Exit codes: 0 on success, 1 when the input is well formed but the
//! mathematics refuses it (not a σ-relation weight, failed hypothesis, failed
//! check), 2 on malformed input.

use std::fs;
use std::io::{self, Read};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gt_relation::action::{act, check_brackets, twisted_act, ActionError};
use gt_relation::graph::{GraphError, GraphJson};
use gt_relation::localization::LocalizationError;
use gt_relation::scalars::{parse_scalar, parse_scalar_list, ParseScalarError};
use gt_relation::sigma::PermutationError;
use gt_relation::tableau::{enumerate_basis, TableauError, TableauJson};
use gt_relation::weights::{
    is_id_relation_closed_form, lower_bound_n_lambda, shifted_weight, sigma_relation_witnesses,
    sigma_tableau, WeightError, DEFAULT_SWEEP_CAP,
};
use gt_relation::{BasisWindow, GtGraph, ModuleSpec, ModuleVector, Permutation, Rational, Tableau};
use serde_json::{json, Value};

/// Version of the JSON reports.
const REPORT_VERSION: u32 = 1;

/// Largest accepted `--window`.
const MAX_WINDOW: u32 = 30;

#[derive(Parser)]
#[command(
    name = "gtrel",
    version,
    about = "Relation Gelfand-Tsetlin modules for gl_n"
)]
struct Cli {
    /// Worker threads (0 picks the number of cores).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Relation verdict for every permutation, with the rejecting predicate.
    Analyze(WeightArgs),
    /// The module of `T_σ(σ⁻¹(λ+℘))`: seed, graph and basis in a window.
    Build(ModuleArgs),
    /// Applies `E_{ij}` (twisted by `--sigma` if given) to a tableau.
    Act(ActArgs),
    /// Checks every commutator relation on the basis in a window.
    Brackets(ModuleArgs),
    /// The witnessing permutations and the lower bound certificate.
    Witnesses(WeightArgs),
    /// Localization, twisted localization or the twisting functor.
    Localize(LocalizeArgs),
    /// Renders the graph of a tableau.
    Render(RenderArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Args)]
struct WeightArgs {
    /// Comma-separated entries of λ, e.g. "-1/6,-2/3,5/6".
    #[arg(long, allow_hyphen_values = true)]
    lambda: String,
    /// Expected rank; checked against the length of λ.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
struct ModuleArgs {
    #[command(flatten)]
    weight: WeightArgs,
    /// One-line images, e.g. "1,3,2" for σ(2)=3, σ(3)=2. Defaults to the identity.
    #[arg(long)]
    sigma: Option<String>,
    /// Bound on every shift coordinate.
    #[arg(long, default_value_t = 3)]
    window: u32,
}

#[derive(Args)]
struct ActArgs {
    /// JSON tableau `{n, rows}` (top row first), or `-` for stdin.
    #[arg(long)]
    tableau: String,
    /// Operator, e.g. "E 1 2".
    #[arg(long)]
    op: String,
    /// Twist the action by this permutation.
    #[arg(long)]
    sigma: Option<String>,
    /// JSON graph `{n, arrows}`; defaults to the graph of the tableau.
    #[arg(long)]
    graph: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
struct LocalizeArgs {
    #[command(flatten)]
    module: ModuleArgs,
    /// Twisting parameter; without it the plain localization is returned.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "functor")]
    z: Option<String>,
    /// Apply the twisting functor instead of localizing.
    #[arg(long)]
    functor: bool,
}

#[derive(Args)]
struct RenderArgs {
    /// JSON tableau `{n, rows}`, or `-` for stdin.
    #[arg(long, conflicts_with = "lambda")]
    tableau: Option<String>,
    /// Render `T_σ(σ⁻¹(λ+℘))` instead of a tableau file.
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<String>,
    #[arg(long)]
    sigma: Option<String>,
    /// Reorder the rows before building the graph.
    #[arg(long)]
    normalize: bool,
    #[arg(long, value_enum, default_value_t = Format::Dot)]
    format: Format,
}

enum Failure {
    Refused(String),
    Malformed(String),
    /// A complete report whose check failed; printed to stdout.
    CheckFailed(String),
}

macro_rules! malformed {
    ($($t:ty),*) => {
        $(impl From<$t> for Failure {
            fn from(e: $t) -> Self {
                Failure::Malformed(e.to_string())
            }
        })*
    };
}

malformed!(
    ParseScalarError,
    PermutationError,
    GraphError,
    io::Error,
    serde_json::Error
);

impl From<WeightError> for Failure {
    fn from(e: WeightError) -> Self {
        match e {
            WeightError::NotSigmaRelation { .. } => Failure::Refused(e.to_string()),
            _ => Failure::Malformed(e.to_string()),
        }
    }
}

impl From<TableauError> for Failure {
    fn from(e: TableauError) -> Self {
        match e {
            TableauError::NotRealization => Failure::Refused(e.to_string()),
            _ => Failure::Malformed(e.to_string()),
        }
    }
}

impl From<ActionError> for Failure {
    fn from(e: ActionError) -> Self {
        match e {
            ActionError::Tableau(e) => e.into(),
            ActionError::Weight(e) => e.into(),
            ActionError::VanishingDenominator { .. } => Failure::Refused(e.to_string()),
            _ => Failure::Malformed(e.to_string()),
        }
    }
}

impl From<LocalizationError> for Failure {
    fn from(e: LocalizationError) -> Self {
        match e {
            LocalizationError::Weight(e) => e.into(),
            LocalizationError::Rank => Failure::Malformed(e.to_string()),
            _ => Failure::Refused(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.jobs > 0 {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.jobs)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let result = match cli.command {
        Command::Analyze(args) => analyze(&args),
        Command::Build(args) => build(&args),
        Command::Act(args) => act_command(&args),
        Command::Brackets(args) => brackets(&args),
        Command::Witnesses(args) => witnesses(&args),
        Command::Localize(args) => localize(&args),
        Command::Render(args) => render(&args),
    };
    match result {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::CheckFailed(out)) => {
            print!("{out}");
            ExitCode::from(1)
        }
        Err(Failure::Refused(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
        Err(Failure::Malformed(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn weight(args: &WeightArgs) -> Result<Vec<Rational>, Failure> {
    let lambda: Vec<Rational> = parse_scalar_list(&args.lambda)?;
    if lambda.is_empty() {
        return Err(WeightError::Empty.into());
    }
    if let Some(n) = args.n {
        if n != lambda.len() {
            return Err(Failure::Malformed(format!(
                "--n {n} but λ has {} entries",
                lambda.len()
            )));
        }
    }
    Ok(lambda)
}

fn permutation(text: Option<&str>, n: usize) -> Result<Permutation, Failure> {
    let Some(text) = text else {
        return Ok(Permutation::identity(n));
    };
    let sigma: Permutation = text.parse()?;
    if sigma.n() != n {
        return Err(WeightError::RankMismatch {
            weight: n,
            sigma: sigma.n(),
        }
        .into());
    }
    Ok(sigma)
}

fn window(bound: u32) -> Result<BasisWindow, Failure> {
    if bound > MAX_WINDOW {
        return Err(Failure::Malformed(format!(
            "window {bound} exceeds the cap {MAX_WINDOW}"
        )));
    }
    Ok(BasisWindow::new(bound))
}

fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text)?;
        Ok(text)
    } else {
        Ok(fs::read_to_string(path)?)
    }
}

fn read_tableau(path: &str) -> Result<Tableau, Failure> {
    let json: TableauJson = serde_json::from_str(&read_input(path)?)?;
    Ok(Tableau::from_json(&json)?)
}

fn strings(values: &[Rational]) -> Vec<String> {
    values.iter().map(|x| x.to_string()).collect()
}

fn to_json_text(value: &Value) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("values serialize");
    text.push('\n');
    text
}

fn graph_value(g: &GtGraph) -> Value {
    serde_json::to_value(g.to_json()).expect("graphs serialize")
}

fn tableau_value(t: &Tableau) -> Value {
    serde_json::to_value(t.to_json()).expect("tableaux serialize")
}

fn arrow_lines(g: &GtGraph) -> String {
    g.arrows()
        .map(|(a, b)| format!("  ({},{}) -> ({},{})\n", a.row, a.col, b.row, b.col))
        .collect()
}

fn analyze(args: &WeightArgs) -> Result<String, Failure> {
    let lambda = weight(args)?;
    let report = sigma_relation_witnesses(&lambda, DEFAULT_SWEEP_CAP)?;
    let verdicts: Vec<Value> = report
        .diagnostics
        .iter()
        .map(|(sigma, obstruction)| {
            json!({
                "sigma": sigma.to_string(),
                "accepted": obstruction.is_none(),
                "reason": obstruction.map(|o| o.to_string()),
            })
        })
        .collect();
    let closed_form = is_id_relation_closed_form(&lambda);
    match args.format {
        Format::Json => Ok(to_json_text(&json!({
            "version": REPORT_VERSION,
            "n": lambda.len(),
            "lambda": strings(&lambda),
            "shifted": strings(&report.shifted),
            "witnesses": report.witnesses.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
            "verdicts": verdicts,
            "id_closed_form": closed_form,
        }))),
        Format::Text | Format::Dot => {
            let mut out = format!(
                "λ = ({})\nλ+℘ = ({})\n",
                strings(&lambda).join(","),
                strings(&report.shifted).join(",")
            );
            for (sigma, obstruction) in &report.diagnostics {
                match obstruction {
                    None => out.push_str(&format!("σ = {sigma}: relation\n")),
                    Some(o) => out.push_str(&format!("σ = {sigma}: rejected ({o})\n")),
                }
            }
            out.push_str(&format!(
                "witnesses: {}\nid closed form: {closed_form}\n",
                report.count()
            ));
            Ok(out)
        }
    }
}

fn witnesses(args: &WeightArgs) -> Result<String, Failure> {
    let lambda = weight(args)?;
    let report = sigma_relation_witnesses(&lambda, DEFAULT_SWEEP_CAP)?;
    let bound = lower_bound_n_lambda(&lambda, DEFAULT_SWEEP_CAP)?;
    let names: Vec<String> = report.witnesses.iter().map(|s| s.to_string()).collect();
    match args.format {
        Format::Json => Ok(to_json_text(&json!({
            "version": REPORT_VERSION,
            "lambda": strings(&lambda),
            "count": report.count(),
            "witnesses": names,
            "lower_bound": bound,
        }))),
        Format::Text | Format::Dot => {
            let mut out = format!("n_λ = {}\n", report.count());
            for name in &names {
                out.push_str(&format!("  {name}\n"));
            }
            out.push_str(&format!(
                "lower bound {} from A = {:?}\n",
                bound.bound, bound.subset
            ));
            Ok(out)
        }
    }
}

fn module(args: &ModuleArgs) -> Result<(Vec<Rational>, ModuleSpec), Failure> {
    let lambda = weight(&args.weight)?;
    let sigma = permutation(args.sigma.as_deref(), lambda.len())?;
    let spec = ModuleSpec::highest_weight(&lambda, &sigma)?;
    Ok((lambda, spec))
}

fn build(args: &ModuleArgs) -> Result<String, Failure> {
    let (lambda, spec) = module(args)?;
    let window = window(args.window)?;
    let basis = enumerate_basis(&spec.seed, &spec.graph, &window)?;
    match args.weight.format {
        Format::Json => Ok(to_json_text(&json!({
            "version": REPORT_VERSION,
            "lambda": strings(&lambda),
            "shifted": strings(&shifted_weight(&lambda)),
            "sigma": spec.sigma.to_string(),
            "seed": tableau_value(&spec.seed),
            "graph": graph_value(&spec.graph),
            "window": args.window,
            "dimension": basis.len(),
            "complete": basis.complete,
            "basis": basis.tableaux.iter().map(tableau_value).collect::<Vec<_>>(),
        }))),
        Format::Dot => Ok(spec.graph.to_dot()),
        Format::Text => {
            let mut out = format!(
                "σ = {}\nseed:\n{}graph:\n{}dimension in window {}: {}{}\n",
                spec.sigma,
                spec.seed,
                arrow_lines(&spec.graph),
                args.window,
                basis.len(),
                if basis.complete { " (complete)" } else { "" }
            );
            for t in &basis.tableaux {
                out.push_str(&format!("\n{t}"));
            }
            Ok(out)
        }
    }
}

fn brackets(args: &ModuleArgs) -> Result<String, Failure> {
    let (_, spec) = module(args)?;
    let window = window(args.window)?;
    let report = check_brackets(&spec.graph, &spec.seed, &window, Some(&spec.sigma))?;
    let violations: Vec<Value> = report
        .violations
        .iter()
        .map(|(a, b, c, d, t)| json!({"relation": [a, b, c, d], "tableau": t}))
        .collect();
    let out = match args.weight.format {
        Format::Json => to_json_text(&json!({
            "version": REPORT_VERSION,
            "sigma": spec.sigma.to_string(),
            "window": args.window,
            "vectors_checked": report.vectors_checked,
            "vectors_skipped": report.vectors_skipped,
            "relations_checked": report.relations_checked,
            "violations": violations,
            "passed": report.passed(),
        })),
        Format::Text | Format::Dot => format!(
            "checked {} vectors ({} skipped), {} relations, {} violations\n",
            report.vectors_checked,
            report.vectors_skipped,
            report.relations_checked,
            report.violations.len()
        ),
    };
    if report.passed() {
        Ok(out)
    } else {
        Err(Failure::CheckFailed(out))
    }
}

/// Parses `"E i j"`.
fn operator(text: &str, n: usize) -> Result<(usize, usize), Failure> {
    let bad = || Failure::Malformed(format!("operator `{text}` is not of the form \"E i j\""));
    let parts: Vec<&str> = text.split_whitespace().collect();
    let [e, i, j] = parts[..] else {
        return Err(bad());
    };
    if e != "E" {
        return Err(bad());
    }
    let (i, j): (usize, usize) = (i.parse().map_err(|_| bad())?, j.parse().map_err(|_| bad())?);
    if !(1..=n).contains(&i) || !(1..=n).contains(&j) {
        return Err(ActionError::Index(i, j, n).into());
    }
    Ok((i, j))
}

fn act_command(args: &ActArgs) -> Result<String, Failure> {
    let t = read_tableau(&args.tableau)?;
    let n = t.n();
    let graph = match &args.graph {
        Some(path) => {
            let json: GraphJson = serde_json::from_str(&read_input(path)?)?;
            GtGraph::from_json(&json)?
        }
        None => t.graph(),
    };
    if graph.n() != n {
        return Err(TableauError::RankMismatch {
            tableau: n,
            graph: graph.n(),
        }
        .into());
    }
    if !t.is_realization(&graph) {
        return Err(TableauError::NotRealization.into());
    }
    let (l, m) = operator(&args.op, n)?;
    let sigma = args
        .sigma
        .as_deref()
        .map(|text| permutation(Some(text), n))
        .transpose()?;
    let v = ModuleVector::basis(t);
    let image = match &sigma {
        Some(sigma) => twisted_act(sigma, l, m, &v, &graph)?,
        None => act(l, m, &v, &graph)?,
    };
    match args.format {
        Format::Json => {
            let terms: Vec<Value> = image
                .terms()
                .map(|(t, c)| json!({"coefficient": c.to_string(), "tableau": tableau_value(t)}))
                .collect();
            Ok(to_json_text(&json!({
                "version": REPORT_VERSION,
                "op": [l, m],
                "sigma": sigma.map(|p| p.to_string()),
                "terms": terms,
            })))
        }
        Format::Text | Format::Dot => {
            if image.is_zero() {
                return Ok("0\n".into());
            }
            Ok(image
                .terms()
                .map(|(t, c)| format!("{c} ·\n{t}"))
                .collect::<Vec<_>>()
                .join("\n"))
        }
    }
}

fn localize(args: &LocalizeArgs) -> Result<String, Failure> {
    let (_, before) = module(&args.module)?;
    let (after, z) = if args.functor {
        (before.twisting_functor()?, None)
    } else {
        match &args.z {
            Some(text) => {
                let z: Rational = parse_scalar(text)?;
                (before.twisted_localize(&z)?, Some(z))
            }
            None => (before.localize()?, None),
        }
    };
    let simple = after.is_simple();
    let relation = after.graph.is_relation_graph().unwrap_or(false);
    match args.module.weight.format {
        Format::Json => Ok(to_json_text(&json!({
            "version": REPORT_VERSION,
            "sigma": before.sigma.to_string(),
            "operation": if args.functor { "twisting_functor" } else if z.is_some() { "twisted_localize" } else { "localize" },
            "z": z.map(|z| z.to_string()),
            "before": {"seed": tableau_value(&before.seed), "graph": graph_value(&before.graph)},
            "after": {"seed": tableau_value(&after.seed), "graph": graph_value(&after.graph)},
            "relation_graph": relation,
            "simple": simple,
        }))),
        Format::Dot => Ok(format!(
            "// before\n{}// after\n{}// simple: {simple}\n",
            before.graph.to_dot(),
            after.graph.to_dot()
        )),
        Format::Text => Ok(format!(
            "before:\n{}{}after:\n{}{}relation graph: {relation}\nsimple: {simple}\n",
            before.seed,
            arrow_lines(&before.graph),
            after.seed,
            arrow_lines(&after.graph)
        )),
    }
}

fn render(args: &RenderArgs) -> Result<String, Failure> {
    let t = match (&args.tableau, &args.lambda) {
        (Some(path), _) => read_tableau(path)?,
        (None, Some(lambda)) => {
            let lambda: Vec<Rational> = parse_scalar_list(lambda)?;
            if lambda.is_empty() {
                return Err(WeightError::Empty.into());
            }
            let sigma = permutation(args.sigma.as_deref(), lambda.len())?;
            sigma_tableau(&lambda, &sigma)
        }
        (None, None) => return Err(Failure::Malformed("give --tableau or --lambda".into())),
    };
    let t = if args.normalize {
        t.normalize_rows().0
    } else {
        t
    };
    let g = t.graph();
    match args.format {
        Format::Dot => Ok(g.to_dot()),
        Format::Json => Ok(to_json_text(&json!({
            "version": REPORT_VERSION,
            "tableau": tableau_value(&t),
            "graph": graph_value(&g),
            "relation_graph": g.relation_check().is_ok(),
        }))),
        Format::Text => {
            let verdict = match g.relation_check() {
                Ok(()) => "relation graph".to_string(),
                Err(o) => format!("not a relation graph ({o})"),
            };
            Ok(format!("{t}{}{verdict}\n", arrow_lines(&g)))
        }
    }
}
