//! Batch front door for the neutroset calculus. Exit codes: 0 success,
//! 1 parse/validation error, 2 a check command detected a failing axiom.

mod dataset;
mod formula;

use clap::{Args, Parser, Subcommand, ValueEnum};
use dataset::DResult;
use neutroset::algebra::{conorm_fn, norm_fn, verify_norm_axioms, AxiomRole};
use neutroset::dependence::{
    max_component_sum, off_sum_range_global, pair_sum_bound, ChannelPair, ComponentBounds,
};
use neutroset::offnumber::{trapezoidal_eval, triangular_eval};
use neutroset::polarity::antagonist_projection;
use neutroset::refined::{classify_complex_set, classify_refined_set};
use neutroset::stats::{classify_probability, classify_refined_probability, contribution_pipeline, off_mean};
use neutroset::structures::{
    check_closure, check_topology, classify_graph, classify_matrix, generate_labeled_structure,
    AxiomVerdict, TopologyKind,
};
use neutroset::symbolic::{alternate_order, default_order, eval_formula, SymbolicOrder};
use neutroset::{
    classify_collection, format_rational, int, parse_rational, Classification, ComplementVariant,
    Evidence, NormFamily, Rat,
};
use std::path::{Path, PathBuf};

const DEFAULT_SEED: u64 = 0x0FF5E7;

#[derive(Parser)]
#[command(name = "neutroset", version, about = "Over-/under-/off-set calculus toolkit")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Classify a dataset as standard / over / under / off, with witnesses
    Classify {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Kind::Set)]
        kind: Kind,
    },
    /// Combine collections with a set operation
    Combine {
        a: PathBuf,
        b: Option<PathBuf>,
        #[arg(long, value_enum)]
        op: SetOp,
        #[arg(long, value_enum, default_value_t = Family::Minmax)]
        family: Family,
        #[arg(long, value_enum, default_value_t = Complement::SwapTf)]
        complement_variant: Complement,
        /// Output file (stdout when omitted)
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Evaluate offnumbers, symbolic formulas, projections, dependence bounds
    #[command(subcommand)]
    Eval(EvalCmd),
    /// Summarize a sample: exact mean and off-statistics classification
    Stats(StatsArgs),
    /// Check axioms: norms, topology, closure, generated structures
    #[command(subcommand)]
    Check(CheckCmd),
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Set,
    Graph,
    Matrix,
    Probability,
    RefinedProbability,
    Refined,
    Complex,
    Tripolar,
    Label,
}

#[derive(Clone, Copy, ValueEnum)]
enum SetOp {
    Union,
    Intersect,
    Complement,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Minmax,
    Bounded,
}

impl Family {
    fn into_lib(self) -> NormFamily {
        match self {
            Family::Minmax => NormFamily::MinMax,
            Family::Bounded => NormFamily::Bounded,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Complement {
    SwapTf,
    ReflectTf,
    ReflectAll,
}

impl Complement {
    fn into_lib(self) -> ComplementVariant {
        match self {
            Complement::SwapTf => ComplementVariant::SwapTf,
            Complement::ReflectTf => ComplementVariant::ReflectTf,
            Complement::ReflectAll => ComplementVariant::ReflectAll,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderChoice {
    Default,
    Alt,
}

impl OrderChoice {
    fn into_lib(self) -> SymbolicOrder {
        match self {
            OrderChoice::Default => default_order(),
            OrderChoice::Alt => alternate_order(),
        }
    }
}

#[derive(Subcommand)]
enum EvalCmd {
    /// Evaluate a triangular or trapezoidal offnumber at an abscissa
    Number {
        file: PathBuf,
        #[arg(long)]
        at: String,
    },
    /// Evaluate a symbolic formula over the nine truth symbols
    Sym {
        formula: String,
        #[arg(long, value_enum, default_value_t = OrderChoice::Default)]
        order: OrderChoice,
    },
    /// Project a positive triple through an antagonism degree
    Project {
        #[arg(long)]
        t: String,
        #[arg(long)]
        i: String,
        #[arg(long)]
        f: String,
        /// Antagonism degree in [0, 1]
        #[arg(long)]
        degree: String,
        /// Falsehood ceiling of the frame
        #[arg(long)]
        omega_f: String,
    },
    /// Dependence-aware sum bounds
    Depend {
        /// Single pair dependence degree: prints the bound 2 - d
        #[arg(long)]
        pair_degree: Option<String>,
        /// Pairwise degrees, e.g. "ft=0.3,if=0.6": prints the exact max sum
        #[arg(long)]
        pairs: Option<String>,
        /// Component bounds "t=lo..hi,i=lo..hi,f=lo..hi" for a sum range
        #[arg(long)]
        bounds: Option<String>,
        /// Global dependence degree used with --bounds
        #[arg(long)]
        degree: Option<String>,
    },
}

#[derive(Args)]
struct StatsArgs {
    /// CSV sample with header id,t,i,f
    sample: Option<PathBuf>,
    /// Raw contribution log {individual: {event: count}} (needs --rules)
    #[arg(long)]
    raw: Option<PathBuf>,
    /// Scoring rules [{event, points_t, count_i, count_f}]
    #[arg(long)]
    rules: Option<PathBuf>,
    /// Normalization thresholds lo,hi for raw scores
    #[arg(long, default_value = "0,20")]
    norm: String,
}

#[derive(Subcommand)]
enum CheckCmd {
    /// Verify the commutative-monoid axioms of a norm/conorm family on a frame
    Norms {
        #[arg(long, value_enum, default_value_t = Family::Minmax)]
        family: Family,
        #[arg(long, default_value = "-1.2")]
        psi: String,
        #[arg(long, default_value = "1.2")]
        omega: String,
        /// Seed for the random sample grid (default 0x0FF5E7)
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Random abscissae per axis (pairs grow quadratically)
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
    /// Check a family of collections against the topology axioms
    Topology {
        family: PathBuf,
        #[arg(long, value_enum)]
        kind: TopoKind,
        #[arg(long = "norm-family", value_enum, default_value_t = Family::Minmax)]
        norm_family: Family,
    },
    /// Check a family for closure under union, intersection, complement
    Closure {
        family: PathBuf,
        #[arg(long = "norm-family", value_enum, default_value_t = Family::Minmax)]
        norm_family: Family,
        #[arg(long, value_enum, default_value_t = Complement::SwapTf)]
        complement_variant: Complement,
    },
    /// Generate a labeled modular structure and print its closure
    Structure { spec: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum TopoKind {
    Over,
    Under,
    Off,
}

impl TopoKind {
    fn into_lib(self) -> TopologyKind {
        match self {
            TopoKind::Over => TopologyKind::Over,
            TopoKind::Under => TopologyKind::Under,
            TopoKind::Off => TopologyKind::Off,
        }
    }
}

fn color_enabled() -> bool {
    std::env::var_os("NO_COLOR").is_none()
}

fn verdict_word(passed: bool) -> String {
    let word = if passed { "pass" } else { "FAIL" };
    if color_enabled() {
        let code = if passed { "32" } else { "31" };
        format!("\u{1b}[{code}m{word}\u{1b}[0m")
    } else {
        word.to_string()
    }
}

fn rat(text: &str) -> DResult<Rat> {
    parse_rational(text).map_err(|e| e.to_string())
}

fn class_word(c: Classification, noun: &str) -> String {
    match c {
        Classification::Standard => "standard".to_string(),
        Classification::Over => format!("over{noun}"),
        Classification::Under => format!("under{noun}"),
        Classification::Off => format!("off{noun}"),
    }
}

fn print_triple(t: &Rat, i: &Rat, f: &Rat) {
    println!(
        "({}, {}, {})",
        format_rational(t),
        format_rational(i),
        format_rational(f)
    );
}

fn cmd_classify(input: &Path, kind: Kind) -> DResult<i32> {
    match kind {
        Kind::Set => {
            let c = dataset::load_collection(input)?;
            if c.is_empty() {
                return Err("empty collection".into());
            }
            let class = classify_collection(&c).map_err(|e| e.to_string())?;
            println!("{}: {}", c.name, class_word(class, "set"));
            for w in c.witnesses() {
                println!("  witness: {w}");
            }
        }
        Kind::Graph => {
            let g = dataset::load_graph(input)?;
            let class = classify_graph(&g).map_err(|e| e.to_string())?;
            println!("{}", class_word(class, "graph"));
            for (id, label) in g.vertices() {
                println!("  vertex {id}: {}", class_word(label.evidence().classification(), ""));
            }
            for (k, (u, v, label)) in g.edges().iter().enumerate() {
                println!(
                    "  edge {k} ({u}, {v}): {}",
                    class_word(label.evidence().classification(), "")
                );
            }
        }
        Kind::Matrix => {
            let m = dataset::load_matrix(input)?;
            let class = classify_matrix(&m).map_err(|e| e.to_string())?;
            println!("{}", class_word(class, "matrix"));
            for (rk, row) in m.cells().iter().enumerate() {
                for (ck, cell) in row.iter().enumerate() {
                    let cc = cell.label.evidence().classification();
                    if cc != Classification::Standard {
                        println!("  witness: cell ({rk}, {ck}) is {}", class_word(cc, ""));
                    }
                }
            }
        }
        Kind::Probability => {
            let space = dataset::load_probability(input)?;
            let class = classify_probability(&space).map_err(|e| e.to_string())?;
            println!("{}", class_word(class, "probability"));
            for a in &space {
                let cc = a.evidence().classification();
                if cc != Classification::Standard {
                    println!("  witness: event {} is {}", a.event, class_word(cc, ""));
                }
            }
        }
        Kind::RefinedProbability => {
            let space = dataset::load_refined_probability(input)?;
            let class = classify_refined_probability(&space).map_err(|e| e.to_string())?;
            println!("{}", class_word(class, "probability"));
        }
        Kind::Refined => {
            let elems = dataset::load_refined(input)?;
            let class = classify_refined_set(&elems).map_err(|e| e.to_string())?;
            println!("{}", class_word(class, "set"));
            for e in &elems {
                let cc = e.evidence().classification();
                if cc != Classification::Standard {
                    println!("  witness: {} is {}", e.id, class_word(cc, ""));
                }
            }
        }
        Kind::Complex => {
            let elems = dataset::load_complex(input)?;
            let class = classify_complex_set(&elems).map_err(|e| e.to_string())?;
            println!("{}", class_word(class, "set"));
            for e in &elems {
                let cc = e.evidence().classification();
                if cc != Classification::Standard {
                    println!("  witness: {} is {} (amplitudes)", e.id, class_word(cc, ""));
                }
            }
        }
        Kind::Tripolar => {
            let elems = dataset::load_polar_elements(input)?;
            let ev = elems
                .iter()
                .map(|(_, label)| label.evidence())
                .fold(Evidence::default(), Evidence::merge);
            println!("{}", class_word(ev.classification(), "set"));
            for (id, label) in &elems {
                let cc = label.evidence().classification();
                if cc != Classification::Standard {
                    println!("  witness: {id} is {}", class_word(cc, ""));
                }
            }
        }
        Kind::Label => {
            let spec = dataset::load_structure(input)?;
            let out = generate_labeled_structure(&spec.generators, &spec.law, spec.modulus)
                .map_err(|e| e.to_string())?;
            let mut ev = Evidence::default();
            for res in &out {
                for (t, i, f) in &res.labels {
                    for v in [t, i, f] {
                        ev = ev.merge(Evidence {
                            over: v > &int(1),
                            under: v < &int(0),
                        });
                    }
                }
            }
            println!("{}", class_word(ev.classification(), "structure"));
            for res in &out {
                println!("  {res}");
            }
        }
    }
    Ok(0)
}

fn cmd_combine(
    a: &Path,
    b: Option<&Path>,
    op: SetOp,
    family: Family,
    variant: Complement,
    output: Option<&Path>,
) -> DResult<i32> {
    let ca = dataset::load_collection(a)?;
    let result = match op {
        SetOp::Complement => {
            if b.is_some() {
                return Err("complement takes one input collection".into());
            }
            neutroset::off_complement(&ca, variant.into_lib()).map_err(|e| e.to_string())?
        }
        SetOp::Union | SetOp::Intersect => {
            let b = b.ok_or("union/intersect need two input collections")?;
            let cb = dataset::load_collection(b)?;
            match op {
                SetOp::Union => neutroset::off_union(&ca, &cb, family.into_lib()),
                _ => neutroset::off_intersection(&ca, &cb, family.into_lib()),
            }
            .map_err(|e| e.to_string())?
        }
    };
    let json = dataset::collection_to_json(&result);
    let text = serde_json::to_string_pretty(&json).map_err(|e| e.to_string())?;
    match output {
        Some(path) => std::fs::write(path, text + "\n").map_err(|e| e.to_string())?,
        None => println!("{text}"),
    }
    Ok(0)
}

fn parse_pairs(spec: &str) -> DResult<Vec<(ChannelPair, Rat)>> {
    let mut out = Vec::new();
    for part in spec.split(',') {
        let (key, val) = part
            .split_once('=')
            .ok_or_else(|| format!("bad pair spec {part:?}, expected e.g. ft=0.3"))?;
        let pair = match key.trim().to_ascii_lowercase().as_str() {
            "ti" | "it" => ChannelPair::TI,
            "if" | "fi" => ChannelPair::IF,
            "ft" | "tf" => ChannelPair::FT,
            other => return Err(format!("unknown channel pair {other:?}")),
        };
        out.push((pair, rat(val.trim())?));
    }
    Ok(out)
}

fn parse_bounds(spec: &str) -> DResult<ComponentBounds> {
    let mut t = None;
    let mut i = None;
    let mut f = None;
    for part in spec.split(',') {
        let (key, val) = part
            .split_once('=')
            .ok_or_else(|| format!("bad bounds spec {part:?}, expected e.g. t=-1.2..1.2"))?;
        let (lo, hi) = val
            .split_once("..")
            .ok_or_else(|| format!("bad range {val:?}, expected lo..hi"))?;
        let range = Some((rat(lo.trim())?, rat(hi.trim())?));
        match key.trim().to_ascii_lowercase().as_str() {
            "t" => t = range,
            "i" => i = range,
            "f" => f = range,
            other => return Err(format!("unknown channel {other:?}")),
        }
    }
    match (t, i, f) {
        (Some(t), Some(i), Some(f)) => ComponentBounds::new(t, i, f).map_err(|e| e.to_string()),
        _ => Err("bounds need all of t=, i=, f=".into()),
    }
}

fn cmd_eval(cmd: EvalCmd) -> DResult<i32> {
    match cmd {
        EvalCmd::Number { file, at } => {
            let spec = dataset::load_offnumber(&file)?;
            let x = rat(&at)?;
            let (t, i, f) = match (&spec.tri, &spec.trap) {
                (Some(n), _) => triangular_eval(n, &x),
                (_, Some(n)) => trapezoidal_eval(n, &x),
                _ => unreachable!(),
            };
            print_triple(&t, &i, &f);
        }
        EvalCmd::Sym { formula, order } => {
            let f = formula::parse_formula(&formula)?;
            println!("{}", eval_formula(&f, &order.into_lib()));
        }
        EvalCmd::Project {
            t,
            i,
            f,
            degree,
            omega_f,
        } => {
            let (pt, pi, pf) = antagonist_projection(
                &rat(&t)?,
                &rat(&i)?,
                &rat(&f)?,
                &rat(&degree)?,
                &rat(&omega_f)?,
            )
            .map_err(|e| e.to_string())?;
            print_triple(&pt, &pi, &pf);
        }
        EvalCmd::Depend {
            pair_degree,
            pairs,
            bounds,
            degree,
        } => {
            let mut printed = false;
            if let Some(d) = pair_degree {
                let bound = pair_sum_bound(&rat(&d)?).map_err(|e| e.to_string())?;
                println!("pair sum bound: {}", format_rational(&bound));
                printed = true;
            }
            if let Some(spec) = pairs {
                let best =
                    max_component_sum(&parse_pairs(&spec)?).map_err(|e| e.to_string())?;
                println!("max component sum: {}", format_rational(&best));
                printed = true;
            }
            if let Some(spec) = bounds {
                let d = degree.ok_or("--bounds needs --degree")?;
                let b = parse_bounds(&spec)?;
                let (lo, hi) =
                    off_sum_range_global(&b, &rat(&d)?).map_err(|e| e.to_string())?;
                println!(
                    "sum range: [{}, {}]",
                    format_rational(&lo),
                    format_rational(&hi)
                );
                printed = true;
            }
            if !printed {
                return Err("depend needs --pair-degree, --pairs, or --bounds".into());
            }
        }
    }
    Ok(0)
}

fn cmd_stats(args: StatsArgs) -> DResult<i32> {
    let (rows, mean, class) = match (&args.sample, &args.raw) {
        (Some(sample), None) => {
            let rows = dataset::load_sample(sample)?;
            let triples: Vec<_> = rows.iter().map(|(_, t)| t.clone()).collect();
            let mean = off_mean(&triples).map_err(|e| e.to_string())?;
            let ev = triples
                .iter()
                .flat_map(|(t, i, f)| [t, i, f])
                .fold(Evidence::default(), |ev, v| {
                    ev.merge(Evidence {
                        over: v > &int(1),
                        under: v < &int(0),
                    })
                });
            (rows, mean, ev.classification())
        }
        (None, Some(raw)) => {
            let rules_path = args.rules.as_ref().ok_or("--raw needs --rules")?;
            let (lo, hi) = args
                .norm
                .split_once(',')
                .ok_or("--norm expects lo,hi")?;
            let result = contribution_pipeline(
                &dataset::load_contributions(raw)?,
                &dataset::load_rules(rules_path)?,
                &rat(lo.trim())?,
                &rat(hi.trim())?,
            )
            .map_err(|e| e.to_string())?;
            (result.rows, result.mean, result.classification)
        }
        _ => return Err("stats needs either a CSV sample or --raw with --rules".into()),
    };
    for (id, (t, i, f)) in &rows {
        println!(
            "{id}: ({}, {}, {})",
            format_rational(t),
            format_rational(i),
            format_rational(f)
        );
    }
    println!(
        "mean: ({}, {}, {})",
        format_rational(&mean.0),
        format_rational(&mean.1),
        format_rational(&mean.2)
    );
    let note = match class {
        Classification::Off => " (under- and over-evidence present)",
        Classification::Over => " (over-evidence present)",
        Classification::Under => " (under-evidence present)",
        Classification::Standard => "",
    };
    println!("classification: {}{note}", class_word(class, "statistics"));
    Ok(0)
}

fn print_verdict(name: &str, v: &AxiomVerdict) {
    match &v.witness {
        Some(w) if !v.passed => println!("  {name}: {} ({w})", verdict_word(false)),
        _ => println!("  {name}: {}", verdict_word(v.passed)),
    }
}

fn cmd_check(cmd: CheckCmd) -> DResult<i32> {
    match cmd {
        CheckCmd::Norms {
            family,
            psi,
            omega,
            seed,
            samples,
        } => {
            let psi = rat(&psi)?;
            let omega = rat(&omega)?;
            let mut all = true;
            for role in [AxiomRole::Norm, AxiomRole::Conorm] {
                let report = match role {
                    AxiomRole::Norm => {
                        let f = norm_fn(family.into_lib(), &psi, &omega);
                        verify_norm_axioms(&f, role, &psi, &omega, samples, seed)
                    }
                    AxiomRole::Conorm => {
                        let f = conorm_fn(family.into_lib(), &psi, &omega);
                        verify_norm_axioms(&f, role, &psi, &omega, samples, seed)
                    }
                };
                let label = match role {
                    AxiomRole::Norm => "norm",
                    AxiomRole::Conorm => "conorm",
                };
                println!("{label}:");
                for c in &report.checks {
                    match &c.counterexample {
                        Some(ce) if !c.passed => {
                            println!("  {}: {} ({ce})", c.name, verdict_word(false))
                        }
                        _ => println!("  {}: {}", c.name, verdict_word(c.passed)),
                    }
                }
                all &= report.all_passed();
            }
            Ok(if all { 0 } else { 2 })
        }
        CheckCmd::Topology {
            family,
            kind,
            norm_family: _,
        } => {
            let members = dataset::load_family(&family)?;
            let frame = members[0].frame().clone();
            let report = check_topology(&members, &frame, kind.into_lib())
                .map_err(|e| e.to_string())?;
            print_verdict("constants", &report.constants);
            print_verdict("intersections", &report.intersections);
            print_verdict("unions", &report.unions);
            Ok(if report.all_passed() { 0 } else { 2 })
        }
        CheckCmd::Closure {
            family,
            norm_family,
            complement_variant,
        } => {
            let members = dataset::load_family(&family)?;
            let report = check_closure(
                &members,
                norm_family.into_lib(),
                complement_variant.into_lib(),
            )
            .map_err(|e| e.to_string())?;
            print_verdict("union", &report.union);
            print_verdict("intersection", &report.intersection);
            print_verdict("complement", &report.complement);
            Ok(if report.closed() { 0 } else { 2 })
        }
        CheckCmd::Structure { spec } => {
            let spec = dataset::load_structure(&spec)?;
            let out = generate_labeled_structure(&spec.generators, &spec.law, spec.modulus)
                .map_err(|e| e.to_string())?;
            for res in &out {
                println!("{res}");
            }
            Ok(0)
        }
    }
}

fn run(cli: Cli) -> DResult<i32> {
    match cli.cmd {
        Cmd::Classify { input, kind } => cmd_classify(&input, kind),
        Cmd::Combine {
            a,
            b,
            op,
            family,
            complement_variant,
            output,
        } => cmd_combine(
            &a,
            b.as_deref(),
            op,
            family,
            complement_variant,
            output.as_deref(),
        ),
        Cmd::Eval(cmd) => cmd_eval(cmd),
        Cmd::Stats(args) => cmd_stats(args),
        Cmd::Check(cmd) => cmd_check(cmd),
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help/version requests are not errors.
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            std::process::exit(1);
        }
    }
}
