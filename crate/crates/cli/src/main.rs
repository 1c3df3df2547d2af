//! Command-line front end: evaluates bounds, Hilbert functions, Gröbner
//! bases, and point-set checks, printing a deterministic JSON report on
//! stdout and a one-line human summary (with timing) on stderr.
//!
//! Exit codes: 0 on success, 1 when a mathematical hypothesis is violated
//! (parameter windows, non-vanishing generators, degree guards), 2 on
//! input or parse errors.

mod input;
mod report;

use std::fmt;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde_json::{json, Value};

use sdist::bounds::{
    box_bound, dgs_bound, permutation_bound, uniform_bound, BoundSpec, BoundsError,
};
use sdist::groebner::buchberger;
use sdist::hilbert::{
    hilbert_function, hilbert_poly_estimate, vanishing_ideal_with_standard_monomials,
    EstimateError,
};
use sdist::parse::parse_polynomial;
use sdist::points::{generate_family, FamilySpec, PointSet};
use sdist::rational::{parse_rational, rat_int, Rational};
use sdist::verify::{
    brute_force_max_sdist, check_distance_bound, check_pp_theorem, check_pp_theorem_canonical,
    PpTheoremReport, VerifyError,
};
use sdist::TermOrder;

#[derive(Debug)]
pub struct CliError {
    message: String,
    hypothesis: bool,
}

impl CliError {
    pub fn input(message: impl Into<String>) -> Self {
        CliError {
            message: message.into(),
            hypothesis: false,
        }
    }

    pub fn hypothesis(message: impl Into<String>) -> Self {
        CliError {
            message: message.into(),
            hypothesis: true,
        }
    }

    pub fn exit_code(&self) -> i32 {
        if self.hypothesis {
            1
        } else {
            2
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.message)
    }
}

impl From<BoundsError> for CliError {
    fn from(e: BoundsError) -> Self {
        CliError::hypothesis(e.to_string())
    }
}

impl From<VerifyError> for CliError {
    fn from(e: VerifyError) -> Self {
        CliError::hypothesis(e.to_string())
    }
}

impl From<EstimateError> for CliError {
    fn from(e: EstimateError) -> Self {
        CliError::hypothesis(e.to_string())
    }
}

#[derive(Parser)]
#[command(
    name = "sdist",
    version,
    about = "Exact bounds for s-distance sets in real algebraic sets"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a bound family at given parameters
    Bound(BoundArgs),
    /// Affine Hilbert function of an ideal, with optional polynomial estimation
    Hilbert(HilbertArgs),
    /// Reduced Groebner basis of an ideal
    Groebner(GroebnerArgs),
    /// Vanishing ideal of a finite point set
    VanishingIdeal(VanishingIdealArgs),
    /// Check a point set against a bound family and the rank/inertia bounds
    Verify(VerifyArgs),
    /// Brute-force maximum s-distance subsets of a generated family
    Search(SearchArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Bbs,
    Dgs,
    Hypersurface,
    Spheres,
    Box,
    Perm,
    Uniform,
    General,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OrderArg {
    Lex,
    Deglex,
}

impl From<OrderArg> for TermOrder {
    fn from(value: OrderArg) -> Self {
        match value {
            OrderArg::Lex => TermOrder::Lex,
            OrderArg::Deglex => TermOrder::DegLex,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GeneratorArg {
    Box,
    Uniform,
    Perm,
    EvenWeight,
    Sphere,
}

#[derive(Args)]
struct BoundArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    /// Ambient dimension (number of variables)
    #[arg(long)]
    n: Option<u32>,
    /// Number of distinct distances
    #[arg(long)]
    s: u32,
    /// Hypersurface degree / uniform layer weight
    #[arg(long)]
    d: Option<u32>,
    /// Number of spheres
    #[arg(long)]
    p: Option<u32>,
    /// Values per box coordinate
    #[arg(long)]
    q: Option<u32>,
    /// Generator file for the general family
    #[arg(long)]
    ideal: Option<PathBuf>,
    /// Arity override for the ideal file
    #[arg(long)]
    arity: Option<usize>,
}

#[derive(Args)]
struct HilbertArgs {
    #[arg(long)]
    ideal: PathBuf,
    #[arg(long)]
    s: u32,
    #[arg(long)]
    arity: Option<usize>,
    /// Also estimate the eventual Hilbert polynomial by finite differences
    #[arg(long, requires = "s_lo", requires = "s_hi")]
    estimate_poly: bool,
    #[arg(long)]
    s_lo: Option<u32>,
    #[arg(long)]
    s_hi: Option<u32>,
}

#[derive(Args)]
struct GroebnerArgs {
    #[arg(long)]
    ideal: PathBuf,
    #[arg(long, value_enum, default_value = "deglex")]
    order: OrderArg,
    #[arg(long)]
    arity: Option<usize>,
}

#[derive(Args)]
struct VanishingIdealArgs {
    #[arg(long)]
    points: PathBuf,
    #[arg(long, value_enum, default_value = "deglex")]
    order: OrderArg,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    points: PathBuf,
    /// Bound family to check the set against
    #[arg(long, value_enum)]
    family: Option<FamilyArg>,
    /// Generator file; implies the general family
    #[arg(long)]
    ideal: Option<PathBuf>,
    #[arg(long)]
    arity: Option<usize>,
    #[arg(long)]
    d: Option<u32>,
    #[arg(long)]
    p: Option<u32>,
    #[arg(long)]
    q: Option<u32>,
    /// Also check the evaluation-matrix rank and inertia bounds
    #[arg(long)]
    pp_check: bool,
    /// Level for the rank/inertia check (default: the distance count)
    #[arg(long)]
    s: Option<u32>,
    /// 2n-variate polynomial file for the rank/inertia check
    /// (default: the canonical distance polynomial)
    #[arg(long)]
    poly: Option<PathBuf>,
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long, value_enum)]
    generator: GeneratorArg,
    /// Distance budget for subsets
    #[arg(long)]
    s: usize,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    q: Option<i64>,
    #[arg(long)]
    d: Option<usize>,
    /// Points to sample (sphere generator)
    #[arg(long)]
    count: Option<usize>,
    /// Squared radius, a rational like 9/4 (sphere generator)
    #[arg(long)]
    radius2: Option<String>,
    /// Cap on the subset size searched
    #[arg(long)]
    size_cap: Option<usize>,
    /// Seed for sampled generators (default: SDIST_SEED or 0)
    #[arg(long)]
    seed: Option<u64>,
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        // clap exits 0 for --help/--version and 2 for usage errors
        Err(e) => e.exit(),
    };
    let started = Instant::now();
    match run(cli.command) {
        Ok((report, summary)) => {
            println!(
                "{}",
                serde_json::to_string_pretty(&report).expect("report serializes")
            );
            eprintln!("{summary} [{} ms]", started.elapsed().as_millis());
        }
        Err(error) => {
            eprintln!("error: {error}");
            std::process::exit(error.exit_code());
        }
    }
}

fn run(command: Command) -> Result<(Value, String), CliError> {
    match command {
        Command::Bound(args) => run_bound(args),
        Command::Hilbert(args) => run_hilbert(args),
        Command::Groebner(args) => run_groebner(args),
        Command::VanishingIdeal(args) => run_vanishing_ideal(args),
        Command::Verify(args) => run_verify(args),
        Command::Search(args) => run_search(args),
    }
}

fn required<T>(value: Option<T>, option: &str, context: &str) -> Result<T, CliError> {
    value.ok_or_else(|| CliError::input(format!("{context} requires {option}")))
}

fn run_bound(args: BoundArgs) -> Result<(Value, String), CliError> {
    let mut parameters = serde_json::Map::new();
    let spec = match args.family {
        FamilyArg::Bbs => BoundSpec::Bbs {
            n: required(args.n, "--n", "--family bbs")?,
        },
        FamilyArg::Dgs => BoundSpec::Dgs {
            n: required(args.n, "--n", "--family dgs")?,
        },
        FamilyArg::Hypersurface => BoundSpec::Hypersurface {
            n: required(args.n, "--n", "--family hypersurface")?,
            d: required(args.d, "--d", "--family hypersurface")?,
        },
        FamilyArg::Spheres => BoundSpec::SphereUnion {
            n: required(args.n, "--n", "--family spheres")?,
            p: required(args.p, "--p", "--family spheres")?,
        },
        FamilyArg::Box => BoundSpec::Box {
            n: required(args.n, "--n", "--family box")?,
            q: required(args.q, "--q", "--family box")?,
        },
        FamilyArg::Perm => BoundSpec::Permutation {
            n: required(args.n, "--n", "--family perm")?,
        },
        FamilyArg::Uniform => BoundSpec::Uniform {
            n: required(args.n, "--n", "--family uniform")?,
            d: required(args.d, "--d", "--family uniform")?,
        },
        FamilyArg::General => {
            let path = required(args.ideal.as_ref(), "--ideal", "--family general")?;
            let (arity, generators) = input::load_ideal(path, args.arity)?;
            parameters.insert("ideal".into(), json!(path.display().to_string()));
            BoundSpec::GeneralIdeal { arity, generators }
        }
    };
    let bound = spec.evaluate(args.s)?;
    for (key, value) in &bound.parameters {
        parameters.insert(key.clone(), json!(value));
    }
    parameters.insert("family".into(), json!(bound.family.to_string()));
    let summary = format!(
        "{}-bound at {:?} = {}",
        bound.family,
        bound
            .parameters
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(", "),
        bound.value
    );
    let results = json!({
        "value": report::big(&bound.value),
        "formula": bound.formula_text,
    });
    Ok((report::report("bound", parameters.into(), results), summary))
}

fn run_hilbert(args: HilbertArgs) -> Result<(Value, String), CliError> {
    let (arity, generators) = input::load_ideal(&args.ideal, args.arity)?;
    let value = hilbert_function(arity, &generators, args.s);
    let mut results = serde_json::Map::new();
    results.insert("value".into(), report::big(&value));
    let mut summary = format!("h(S/I, {}) = {value} in {arity} variables", args.s);
    if args.estimate_poly {
        let lo = args.s_lo.expect("clap requires s_lo");
        let hi = args.s_hi.expect("clap requires s_hi");
        let estimate = hilbert_poly_estimate(arity, &generators, lo, hi)?;
        results.insert(
            "estimate".into(),
            json!({
                "dimension": estimate.dimension,
                "degree": report::big(&estimate.degree),
                "coefficients": estimate.coefficients.iter().map(report::rational).collect::<Vec<_>>(),
                "stable_from": estimate.stable_from,
                "window": [lo, hi],
            }),
        );
        summary.push_str(&format!(
            "; eventual polynomial: dimension {}, degree {}",
            estimate.dimension, estimate.degree
        ));
    }
    let parameters = json!({
        "ideal": args.ideal.display().to_string(),
        "arity": arity,
        "s": args.s,
    });
    Ok((
        report::report("hilbert", parameters, results.into()),
        summary,
    ))
}

fn run_groebner(args: GroebnerArgs) -> Result<(Value, String), CliError> {
    let (arity, generators) = input::load_ideal(&args.ideal, args.arity)?;
    let order: TermOrder = args.order.into();
    let gb = buchberger(&generators, order)
        .map_err(|e| CliError::hypothesis(e.to_string()))?;
    let leading = gb.leading_monomials();
    let parameters = json!({
        "ideal": args.ideal.display().to_string(),
        "arity": arity,
        "order": order.to_string(),
    });
    let results = json!({
        "basis": report::polynomials(gb.elements()),
        "leading_monomials": report::monomials(&leading),
        "reduced": gb.is_reduced(),
    });
    let summary = format!(
        "reduced {order} basis with {} elements",
        gb.elements().len()
    );
    Ok((report::report("groebner", parameters, results), summary))
}

fn run_vanishing_ideal(args: VanishingIdealArgs) -> Result<(Value, String), CliError> {
    let points = input::load_points(&args.points)?;
    let order: TermOrder = args.order.into();
    let (gb, sm) = vanishing_ideal_with_standard_monomials(&points, order);
    let parameters = json!({
        "points": args.points.display().to_string(),
        "size": points.len(),
        "arity": points.arity(),
        "order": order.to_string(),
    });
    let results = json!({
        "basis": report::polynomials(gb.elements()),
        "standard_monomials": report::monomials(sm.monomials()),
        "standard_monomial_count": sm.len(),
        "counts_by_degree": sm.counts_by_degree(),
    });
    let summary = format!(
        "vanishing ideal of {} points: {} basis elements, {} standard monomials",
        points.len(),
        gb.elements().len(),
        sm.len()
    );
    Ok((
        report::report("vanishing-ideal", parameters, results),
        summary,
    ))
}

fn verify_spec(args: &VerifyArgs, points: &PointSet) -> Result<(BoundSpec, Value), CliError> {
    let n = points.arity() as u32;
    if let Some(path) = &args.ideal {
        if args.family.is_some() && args.family != Some(FamilyArg::General) {
            return Err(CliError::input(
                "--ideal implies --family general; drop the conflicting --family",
            ));
        }
        let (arity, generators) = input::load_ideal(path, args.arity)?;
        let info = json!(path.display().to_string());
        return Ok((BoundSpec::GeneralIdeal { arity, generators }, info));
    }
    let family = required(args.family, "--family or --ideal", "verify")?;
    let spec = match family {
        FamilyArg::Bbs => BoundSpec::Bbs { n },
        FamilyArg::Dgs => BoundSpec::Dgs { n },
        FamilyArg::Hypersurface => BoundSpec::Hypersurface {
            n,
            d: required(args.d, "--d", "--family hypersurface")?,
        },
        FamilyArg::Spheres => BoundSpec::SphereUnion {
            n,
            p: required(args.p, "--p", "--family spheres")?,
        },
        FamilyArg::Box => BoundSpec::Box {
            n,
            q: required(args.q, "--q", "--family box")?,
        },
        FamilyArg::Perm => BoundSpec::Permutation { n },
        FamilyArg::Uniform => BoundSpec::Uniform {
            n,
            d: required(args.d, "--d", "--family uniform")?,
        },
        FamilyArg::General => {
            return Err(CliError::input("--family general requires --ideal"));
        }
    };
    Ok((spec, Value::Null))
}

fn pp_check_json(report: &PpTheoremReport) -> Value {
    json!({
        "s": report.s,
        "h": report.h_value,
        "rank": report.rank,
        "signature": report::signature(&report.signature),
        "rank_ok": report.rank_ok,
        "inertia_ok": report.inertia_ok,
    })
}

fn run_verify(args: VerifyArgs) -> Result<(Value, String), CliError> {
    let points = input::load_points(&args.points)?;
    let (spec, ideal_info) = verify_spec(&args, &points)?;
    let outcome = check_distance_bound(&points, &spec)?;

    let mut parameters = serde_json::Map::new();
    parameters.insert("points".into(), json!(args.points.display().to_string()));
    parameters.insert("size".into(), json!(points.len()));
    parameters.insert("arity".into(), json!(points.arity()));
    if !ideal_info.is_null() {
        parameters.insert("ideal".into(), ideal_info);
    }

    let mut results = serde_json::Map::new();
    results.insert("s".into(), json!(outcome.s));
    results.insert("size".into(), json!(outcome.size));
    results.insert("bound".into(), report::bound_report(&outcome.bound));
    results.insert("holds".into(), json!(outcome.holds));
    let mut summary = format!(
        "s={}, |A|={} <= {} ({}): {}",
        outcome.s,
        outcome.size,
        outcome.bound.value,
        outcome.bound.family,
        if outcome.holds { "holds" } else { "VIOLATED" }
    );

    if args.pp_check {
        let pp = match &args.poly {
            Some(path) => {
                let text = std::fs::read_to_string(path).map_err(|e| {
                    CliError::input(format!("cannot read {}: {e}", path.display()))
                })?;
                let line = text
                    .lines()
                    .map(|l| l.split_once('#').map_or(l, |(b, _)| b).trim())
                    .find(|l| !l.is_empty())
                    .ok_or_else(|| {
                        CliError::input(format!("{}: no polynomial found", path.display()))
                    })?;
                let poly = parse_polynomial(line, 2 * points.arity()).map_err(|e| {
                    CliError::input(format!("{}: {e}", path.display()))
                })?;
                let s = required(args.s, "--s", "--pp-check with --poly")?;
                check_pp_theorem(&points, &poly, s)?
            }
            None => check_pp_theorem_canonical(&points, args.s)?,
        };
        summary.push_str(&format!(
            "; pp-check: rank {} {} 2h={}, {} h={}",
            pp.rank,
            if pp.rank_ok { "<=" } else { ">" },
            2 * pp.h_value,
            pp.signature,
            pp.h_value
        ));
        results.insert("pp_check".into(), pp_check_json(&pp));
    }

    Ok((
        report::report("verify", parameters.into(), results.into()),
        summary,
    ))
}

fn search_family(args: &SearchArgs) -> Result<(FamilySpec, Value), CliError> {
    match args.generator {
        GeneratorArg::Box => {
            let n = required(args.n, "--n", "--generator box")?;
            let q = required(args.q, "--q", "--generator box")?;
            if q < 2 {
                return Err(CliError::hypothesis("--q must be at least 2"));
            }
            let values: Vec<Rational> = (0..q).map(rat_int).collect();
            Ok((
                FamilySpec::Box {
                    sets: vec![values; n],
                },
                json!({"generator": "box", "n": n, "q": q}),
            ))
        }
        GeneratorArg::Uniform => {
            let n = required(args.n, "--n", "--generator uniform")?;
            let d = required(args.d, "--d", "--generator uniform")?;
            Ok((
                FamilySpec::UniformLayer { n, d },
                json!({"generator": "uniform", "n": n, "d": d}),
            ))
        }
        GeneratorArg::Perm => {
            let n = required(args.n, "--n", "--generator perm")?;
            let values: Vec<Rational> = (1..=n as i64).map(rat_int).collect();
            Ok((
                FamilySpec::Permutations { values },
                json!({"generator": "perm", "n": n}),
            ))
        }
        GeneratorArg::EvenWeight => {
            let n = required(args.n, "--n", "--generator even-weight")?;
            Ok((
                FamilySpec::EvenWeight { n },
                json!({"generator": "even-weight", "n": n}),
            ))
        }
        GeneratorArg::Sphere => {
            let n = required(args.n, "--n", "--generator sphere")?;
            let count = required(args.count, "--count", "--generator sphere")?;
            let radius_sq = match &args.radius2 {
                Some(text) => parse_rational(text)
                    .map_err(|e| CliError::input(format!("--radius2: {e}")))?,
                None => rat_int(1),
            };
            let seed = args.seed.unwrap_or_else(default_seed);
            Ok((
                FamilySpec::SphereSample {
                    center: vec![rat_int(0); n],
                    radius_sq: radius_sq.clone(),
                    count,
                    seed,
                },
                json!({
                    "generator": "sphere",
                    "n": n,
                    "count": count,
                    "radius2": report::rational(&radius_sq),
                    "seed": seed,
                }),
            ))
        }
    }
}

fn default_seed() -> u64 {
    std::env::var("SDIST_SEED")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(0)
}

/// The closed-form bound matching a generated family at the searched `s`.
fn search_bound(args: &SearchArgs, points: &PointSet) -> Result<BigUint, BoundsError> {
    let s = args.s as u32;
    let n = points.arity() as u32;
    match args.generator {
        GeneratorArg::Box => box_bound(n, args.q.unwrap_or(2) as u32, s),
        GeneratorArg::EvenWeight => box_bound(n, 2, s),
        GeneratorArg::Uniform => uniform_bound(n, args.d.unwrap_or(0) as u32, s),
        GeneratorArg::Perm => permutation_bound(n, s),
        GeneratorArg::Sphere => dgs_bound(n, s),
    }
}

fn run_search(args: SearchArgs) -> Result<(Value, String), CliError> {
    let (family, mut parameters_json) = search_family(&args)?;
    let candidates = generate_family(&family).map_err(|e| CliError::hypothesis(e.to_string()))?;
    let outcome = brute_force_max_sdist(&candidates, args.s, args.size_cap)?;
    let witness = candidates
        .subset(&outcome.witness)
        .map_err(|e| CliError::hypothesis(e.to_string()))?;

    let parameters = parameters_json
        .as_object_mut()
        .expect("object parameters");
    parameters.insert("s".into(), json!(args.s));
    if let Some(cap) = args.size_cap {
        parameters.insert("size_cap".into(), json!(cap));
    }

    let mut results = serde_json::Map::new();
    results.insert("candidates".into(), json!(candidates.len()));
    results.insert("max_size".into(), json!(outcome.max_size));
    results.insert("witness".into(), report::points(&witness));
    let mut summary = format!(
        "max {}-distance subset of {} candidates has {} points",
        args.s,
        candidates.len(),
        outcome.max_size
    );
    match search_bound(&args, &candidates) {
        Ok(bound) => {
            let within = BigUint::from(outcome.max_size) <= bound;
            summary.push_str(&format!(" (closed-form bound {bound})"));
            results.insert("bound".into(), report::big(&bound));
            results.insert("within_bound".into(), json!(within));
        }
        Err(e) => {
            results.insert("bound".into(), Value::Null);
            results.insert("bound_note".into(), json!(e.to_string()));
        }
    }

    Ok((
        report::report("search", Value::Object(parameters.clone()), results.into()),
        summary,
    ))
}
