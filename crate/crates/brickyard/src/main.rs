use std::io::{self, Read, Write};
use std::process::ExitCode;

use brickyard::json::{
    arc_to_json, diagram_from_json, load_pair, loaded_to_json, permutation_to_json,
    string_brick_to_json, string_pair_to_json, DiagramJson, LoadedPair, PairJson,
};
use brickyard::suites::{run_suite, SUITES};
use brickyard::{field_from_env, render, CliError};
use brickyard_core::brick::enumerate_bricks;
use brickyard_core::mutation::{mutate_left, mutate_right};
use brickyard_core::pair::{semibrick_violation, SemibrickPair};
use brickyard_core::reading::{delta, delta_bar};
use brickyard_core::search::{is_completable, pairwise_obstruction};
use brickyard_core::smc::{complete_full_rank, smc_from_permutation, PermutationOracle};
use brickyard_core::{ArcDiagram, BrickUniverse, Color, Error, Permutation};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "brickyard", version, about = "Completability of semibrick pairs over RA_n and D4")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the bricks of RA_n.
    Bricks {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = ListFormat::Json)]
        format: ListFormat,
    },
    /// The 2-term simple minded collection of a permutation, or of all of them.
    Smc {
        #[arg(long, conflicts_with_all = ["n", "all"])]
        perm: Option<String>,
        #[arg(long, requires = "all")]
        n: Option<usize>,
        #[arg(long, requires = "n")]
        all: bool,
    },
    /// Semibrick pair, pairwise and full completability of a pair.
    Check {
        /// Pair JSON file, or `-` for standard input.
        #[arg(long)]
        input: String,
        /// Exit with status 1 unless the pair has this property.
        #[arg(long = "assert", value_enum)]
        assert_property: Option<Property>,
    },
    /// Left or right mutation at the i-th member of D or U, as listed in the input.
    Mutate {
        #[arg(long)]
        input: String,
        #[arg(long, conflicts_with = "right", required_unless_present = "right")]
        left: Option<usize>,
        #[arg(long)]
        right: Option<usize>,
    },
    /// A 2-term simple minded collection containing the pair.
    Complete {
        #[arg(long)]
        input: String,
    },
    /// Draw an arc diagram, given as JSON or as the two diagrams of a permutation.
    Render {
        #[arg(long, conflicts_with = "perm", required_unless_present = "perm")]
        input: Option<String>,
        #[arg(long)]
        perm: Option<String>,
        #[arg(long, value_enum, default_value_t = RenderFormat::Ascii)]
        format: RenderFormat,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, required_unless_present = "list")]
        suite: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Print the registered suites.
        #[arg(long)]
        list: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ListFormat {
    Json,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum RenderFormat {
    Ascii,
    Tikz,
}

#[derive(Clone, Copy, ValueEnum)]
enum Property {
    SemibrickPair,
    Pairwise,
    Completable,
}

/// Exit status 1: the run was fine but a requested property fails.
struct PropertyFailed(String);

enum Failure {
    Property(PropertyFailed),
    Input(CliError),
}

impl From<CliError> for Failure {
    fn from(e: CliError) -> Self {
        Failure::Input(e)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(CliError::Core(e))
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        if e.is_io() {
            return Failure::Input(CliError::Io(e.into()));
        }
        Failure::Input(CliError::Json(e))
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Input(CliError::Io(e))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Property(PropertyFailed(msg))) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        // A reader such as `head` closing the pipe early is not an error.
        Err(Failure::Input(CliError::Io(e))) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Input(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn read_input(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        Ok(std::fs::read_to_string(path)?)
    }
}

fn emit(value: &impl Serialize) -> Result<(), Failure> {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, value)?;
    writeln!(out)?;
    Ok(())
}

fn read_pair(path: &str) -> Result<LoadedPair, CliError> {
    let p: PairJson = serde_json::from_str(&read_input(path)?)?;
    load_pair(&p, field_from_env()?)
}

fn run(cmd: Command) -> Result<(), Failure> {
    match cmd {
        Command::Bricks { n, format } => bricks(n, format),
        Command::Smc { perm, n, all } => smc(perm, n, all),
        Command::Check { input, assert_property } => check(&input, assert_property),
        Command::Mutate { input, left, right } => mutate(&input, left, right),
        Command::Complete { input } => complete(&input),
        Command::Render { input, perm, format } => render_cmd(input, perm, format),
        Command::Verify { suite, n, seed, list } => verify(suite, n, seed, list),
    }
}

fn bricks(n: usize, format: ListFormat) -> Result<(), Failure> {
    if !(1..=8).contains(&n) {
        return Err(CliError::Input(format!("--n must be in 1..=8, got {n}")).into());
    }
    let bricks = enumerate_bricks(n);
    match format {
        ListFormat::Json => {
            let list: Vec<Value> = bricks
                .iter()
                .map(|b| {
                    json!({
                        "walk": b.walk(),
                        "stacked": b.stacked(),
                        "string": string_brick_to_json(b),
                        "arc": arc_to_json(&b.to_arc(Color::Green)),
                    })
                })
                .collect();
            emit(&json!({ "n": n, "count": bricks.len(), "bricks": list }))
        }
        ListFormat::Table => {
            let mut out = io::stdout().lock();
            for b in &bricks {
                writeln!(out, "{:<16} {:<16} {}", b.walk(), b.stacked(), b.to_arc(Color::Green))?;
            }
            writeln!(out, "count: {}", bricks.len())?;
            Ok(())
        }
    }
}

#[derive(Serialize)]
struct SmcRecord {
    permutation: Vec<usize>,
    #[serde(flatten)]
    pair: PairJson,
}

fn smc_record(w: &Permutation) -> SmcRecord {
    SmcRecord {
        permutation: permutation_to_json(w),
        pair: string_pair_to_json(w.rank(), &smc_from_permutation(w)),
    }
}

fn parse_perm(text: &str) -> Result<Permutation, CliError> {
    let w = Permutation::parse(text)?;
    if w.rank() == 0 {
        return Err(CliError::Input("a permutation needs at least two letters".into()));
    }
    Ok(w)
}

fn smc(perm: Option<String>, n: Option<usize>, all: bool) -> Result<(), Failure> {
    match (perm, n) {
        (Some(p), _) => emit(&smc_record(&parse_perm(&p)?)),
        (None, Some(k)) if all => {
            if !(1..=6).contains(&k) {
                return Err(CliError::Input(format!("--n must be in 1..=6, got {k}")).into());
            }
            let mut out = io::stdout().lock();
            for w in Permutation::all(k) {
                serde_json::to_writer(&mut out, &smc_record(&w))?;
                writeln!(out)?;
            }
            Ok(())
        }
        _ => Err(CliError::Input("give --perm or --n with --all".into()).into()),
    }
}

fn check_report<U: BrickUniverse>(uni: &U, pair: &SemibrickPair<U::Brick>) -> Result<Value, Failure> {
    let violation = semibrick_violation(uni, pair)?;
    if let Some(v @ brickyard_core::pair::Violation::NotABrick { .. }) = &violation {
        return Err(CliError::Core(Error::NotABrick(v.to_string())).into());
    }
    if let Some(v) = violation {
        return Ok(json!({
            "semibrick_pair": false,
            "violation": v.to_string(),
            "pairwise": null,
            "completable": null,
        }));
    }
    let obstruction = pairwise_obstruction(uni, pair)?;
    let search = is_completable(uni, pair)?;
    let names = |bs: &[U::Brick]| bs.iter().map(|b| uni.name(b)).collect::<Vec<_>>();
    Ok(json!({
        "semibrick_pair": true,
        "violation": null,
        "pairwise": obstruction.is_none(),
        "pairwise_obstruction": obstruction.map(|o| json!({ "S": uni.name(&o.s), "T": uni.name(&o.t) })),
        "completable": search.completable,
        "mutation_trace": search.completable.then_some(search.trace),
        "wide_hull": search.terminal.as_deref().map(names),
        "obstruction": search.obstruction.map(|o| o.describe(uni)),
        "states_visited": search.states_visited,
        "pair": pair.describe(uni),
    }))
}

fn check(input: &str, property: Option<Property>) -> Result<(), Failure> {
    let loaded = read_pair(input)?;
    let report = match &loaded {
        LoadedPair::Arcs { uni, pair, .. } => check_report(uni, pair)?,
        LoadedPair::Matrices { uni, pair, .. } => check_report(uni, pair)?,
    };
    emit(&report)?;
    if let Some(p) = property {
        let key = match p {
            Property::SemibrickPair => "semibrick_pair",
            Property::Pairwise => "pairwise",
            Property::Completable => "completable",
        };
        if report[key] != Value::Bool(true) {
            return Err(Failure::Property(PropertyFailed(format!("assertion failed: {key}"))));
        }
    }
    Ok(())
}

fn mutate_in<U: BrickUniverse>(
    uni: &U,
    pair: &SemibrickPair<U::Brick>,
    d_order: &[usize],
    u_order: &[usize],
    left: Option<usize>,
    right: Option<usize>,
) -> Result<SemibrickPair<U::Brick>, Failure> {
    let pick = |order: &[usize], i: usize, side: &str| {
        order.get(i).copied().ok_or_else(|| CliError::Input(format!("{side} has no member {i}")))
    };
    let result = match (left, right) {
        (Some(i), _) => mutate_left(uni, pair, pick(d_order, i, "D")?),
        (None, Some(j)) => mutate_right(uni, pair, pick(u_order, j, "U")?),
        (None, None) => return Err(CliError::Input("give --left or --right".into()).into()),
    };
    result.map_err(|e| match e {
        Error::NotMutationCompatible => Failure::Property(PropertyFailed(e.to_string())),
        other => other.into(),
    })
}

fn mutate(input: &str, left: Option<usize>, right: Option<usize>) -> Result<(), Failure> {
    let loaded = read_pair(input)?;
    let out = match loaded {
        LoadedPair::Arcs { uni, pair, d_order, u_order } => {
            brickyard_core::pair::require_semibrick_pair(&uni, &pair)?;
            let pair = mutate_in(&uni, &pair, &d_order, &u_order, left, right)?;
            loaded_to_json(&LoadedPair::Arcs { uni, pair, d_order: vec![], u_order: vec![] })
        }
        LoadedPair::Matrices { uni, pair, d_order, u_order } => {
            brickyard_core::pair::require_semibrick_pair(&uni, &pair)?;
            let pair = mutate_in(&uni, &pair, &d_order, &u_order, left, right)?;
            loaded_to_json(&LoadedPair::Matrices { uni, pair, d_order: vec![], u_order: vec![] })
        }
    };
    emit(&out)
}

fn complete(input: &str) -> Result<(), Failure> {
    let loaded = read_pair(input)?;
    match &loaded {
        LoadedPair::Arcs { uni, pair, .. } => {
            brickyard_core::pair::require_semibrick_pair(uni, pair)?;
            let n = uni.n();
            let w = if pair.len() == n {
                complete_full_rank(n, pair).ok()
            } else if n <= 7 {
                PermutationOracle::new(n).witness(pair).cloned()
            } else {
                return Err(CliError::Input("completion of partial pairs is limited to n <= 7".into()).into());
            };
            match w {
                Some(w) => emit(&json!({ "completable": true, "smc": smc_record(&w) })),
                None => {
                    emit(&json!({ "completable": false }))?;
                    Err(Failure::Property(PropertyFailed("pair is not completable".into())))
                }
            }
        }
        LoadedPair::Matrices { uni, pair, .. } => {
            let search = is_completable(uni, pair)?;
            let hull = search.terminal.as_ref().map(|t| t.iter().map(|b| uni.name(b)).collect::<Vec<_>>());
            emit(&json!({
                "completable": search.completable,
                "mutation_trace": search.trace,
                "wide_hull": hull,
            }))?;
            if search.completable {
                Ok(())
            } else {
                Err(Failure::Property(PropertyFailed("pair is not completable".into())))
            }
        }
    }
}

fn render_cmd(input: Option<String>, perm: Option<String>, format: RenderFormat) -> Result<(), Failure> {
    let d = match (input, perm) {
        (Some(path), _) => {
            let j: DiagramJson = serde_json::from_str(&read_input(&path)?)?;
            diagram_from_json(&j)?
        }
        (None, Some(p)) => {
            let w = parse_perm(&p)?;
            let arcs = delta(&w).arcs().iter().chain(delta_bar(&w).arcs()).cloned().collect();
            ArcDiagram::two_colored(w.rank() + 1, arcs)?
        }
        (None, None) => return Err(CliError::Input("give --input or --perm".into()).into()),
    };
    let text = match format {
        RenderFormat::Ascii => render::ascii(&d),
        RenderFormat::Tikz => render::tikz(&d),
    };
    io::stdout().lock().write_all(text.as_bytes())?;
    Ok(())
}

fn verify(suite: Option<String>, n: Option<usize>, seed: u64, list: bool) -> Result<(), Failure> {
    if list {
        let names: Vec<Value> = SUITES
            .iter()
            .map(|(name, d, lo, hi)| json!({ "suite": name, "default_n": d, "n_range": [lo, hi] }))
            .collect();
        return emit(&names);
    }
    let name = suite.expect("clap requires --suite");
    let report = run_suite(&name, n, seed, field_from_env()?)?;
    emit(&report)?;
    if report.pass {
        Ok(())
    } else {
        Err(Failure::Property(PropertyFailed(format!("suite {name} failed"))))
    }
}
