//! Command-line front end for the tangent-cone computations.
//!
//! Exit codes: 0 on success, 1 when a verification cross-check fails (a
//! mathematical falsification — this should never fire), 2 on usage or
//! input errors. JSON goes to stdout, diagnostics to stderr. Output is
//! byte-deterministic for fixed inputs. The `SCHUBERT_NODE_BUDGET`
//! environment variable caps enumeration work.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use schubert_core::error::Error;
use schubert_core::grassmann::GrassmannIndex;
use schubert_core::hilbert;
use schubert_core::minors::{self, TermOrder};
use schubert_core::paths;
use schubert_core::standard;

const SCHEMA: &str = "schubert-cli/1";

#[derive(Parser)]
#[command(
    name = "schubert",
    version,
    about = "Hilbert functions and multiplicities of tangent cones to Schubert varieties",
    long_about = "Exact computations attached to a dominating pair v <= w in I(d, n): the \
                  Hilbert function of the tangent cone, its multiplicity, the equivalent \
                  non-intersecting lattice-path count, the monomial/standard-monomial \
                  bijection, and the Groebner view of the defining minors.\n\n\
                  Set SCHUBERT_NODE_BUDGET to cap enumeration work (node count)."
)]
struct Cli {
    /// Number of entries of each index tuple
    #[arg(long)]
    d: usize,
    /// Ambient bound: entries live in 1..=n
    #[arg(long)]
    n: usize,
    /// Base point v as a comma-separated entry list, e.g. 1,2,3
    #[arg(long)]
    v: EntryList,
    /// Upper index w as a comma-separated entry list; must dominate v
    #[arg(long)]
    w: Option<EntryList>,
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    format: Format,
    /// Cross-check every reported quantity by an independent computation
    #[arg(long, global = true)]
    verify: bool,
    /// Directory for file output (SVG renders)
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RenderKind {
    Ascii,
    Svg,
}

#[derive(Subcommand)]
enum Command {
    /// Hilbert function values h(0..=max) of the tangent cone
    Hilbert(HilbertArgs),
    /// Multiplicity = number of maximal square-free dominated monomials
    Multiplicity(MultiplicityArgs),
    /// Non-intersecting lattice-path tuples: count, listing, rendering
    Paths(PathsArgs),
    /// Verify the degree-m bijection between monomials and standard monomials
    Bijection(BijectionArgs),
    /// Initial terms of the defining minors and monomial-ideal membership
    Groebner(GroebnerArgs),
}

#[derive(Args)]
struct HilbertArgs {
    /// Largest degree to evaluate
    #[arg(long, default_value_t = 4)]
    max: usize,
}

#[derive(Args)]
struct MultiplicityArgs {
    /// Also list the maximal dominated sets
    #[arg(long)]
    list: bool,
}

#[derive(Args)]
struct PathsArgs {
    /// Report the count only
    #[arg(long)]
    count_only: bool,
    /// Render each tuple (ascii to stdout; svg files require --out)
    #[arg(long, value_enum)]
    render: Option<RenderKind>,
}

#[derive(Args)]
struct BijectionArgs {
    /// Degree to verify
    #[arg(long, default_value_t = 2)]
    degree: usize,
}

#[derive(Args)]
struct GroebnerArgs {
    /// Term-order families to check (ids 1..=4)
    #[arg(long, value_delimiter = ',', default_values_t = vec![1u8, 2, 3, 4])]
    families: Vec<u8>,
    /// Also reduce every minor outside w to the generating set
    #[arg(long)]
    reduce: bool,
    /// Degree bound for the --verify standard-monomial count comparison
    #[arg(long, default_value_t = 3)]
    max: usize,
}

/// Comma-separated entry list, e.g. `1,2,3`.
#[derive(Clone)]
struct EntryList(Vec<usize>);

impl std::str::FromStr for EntryList {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.split(',')
            .map(|part| {
                part.trim()
                    .parse::<usize>()
                    .map_err(|e| format!("bad entry {:?}: {}", part, e))
            })
            .collect::<Result<Vec<usize>, String>>()
            .map(EntryList)
    }
}

/// Failure modes with their process exit codes.
enum Failure {
    /// Bad input or usage (exit 2)
    Usage(String),
    /// A cross-check failed (exit 1)
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::Falsified(msg) => Failure::Verification(msg),
            other => Failure::Usage(other.to_string()),
        }
    }
}

#[derive(Serialize)]
struct InputEcho {
    d: usize,
    n: usize,
    v: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    w: Option<Vec<usize>>,
}

#[derive(Serialize)]
struct Envelope<T: Serialize> {
    schema: &'static str,
    command: &'static str,
    input: InputEcho,
    #[serde(flatten)]
    payload: T,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {}", msg);
            ExitCode::from(2)
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failure: {}", msg);
            ExitCode::from(1)
        }
    }
}

struct Context {
    v: GrassmannIndex,
    w: Option<GrassmannIndex>,
}

impl Context {
    fn require_w(&self) -> Result<&GrassmannIndex, Failure> {
        self.w
            .as_ref()
            .ok_or_else(|| Failure::Usage("this command needs --w".into()))
    }
}

fn build_context(cli: &Cli) -> Result<Context, Failure> {
    if cli.v.0.len() != cli.d {
        return Err(Failure::Usage(format!(
            "--v has {} entries but --d is {}",
            cli.v.0.len(),
            cli.d
        )));
    }
    let v = GrassmannIndex::new(cli.n, cli.v.0.clone()).map_err(Failure::from)?;
    let w = match &cli.w {
        None => None,
        Some(entries) => {
            if entries.0.len() != cli.d {
                return Err(Failure::Usage(format!(
                    "--w has {} entries but --d is {}",
                    entries.0.len(),
                    cli.d
                )));
            }
            let w = GrassmannIndex::new(cli.n, entries.0.clone()).map_err(Failure::from)?;
            if !v.bruhat_leq(&w).map_err(Failure::from)? {
                return Err(Failure::Usage(format!(
                    "v = {} is not below w = {} in Bruhat order",
                    v, w
                )));
            }
            Some(w)
        }
    };
    Ok(Context { v, w })
}

fn input_echo(cli: &Cli) -> InputEcho {
    InputEcho {
        d: cli.d,
        n: cli.n,
        v: cli.v.0.clone(),
        w: cli.w.as_ref().map(|w| w.0.clone()),
    }
}

fn emit<T: Serialize>(cli: &Cli, command: &'static str, payload: T, table: String) {
    match cli.format {
        Format::Table => print!("{}", table),
        Format::Json => {
            let envelope = Envelope {
                schema: SCHEMA,
                command,
                input: input_echo(cli),
                payload,
            };
            println!("{}", serde_json::to_string_pretty(&envelope).unwrap());
        }
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let ctx = build_context(cli)?;
    match &cli.command {
        Command::Hilbert(args) => cmd_hilbert(cli, &ctx, args),
        Command::Multiplicity(args) => cmd_multiplicity(cli, &ctx, args),
        Command::Paths(args) => cmd_paths(cli, &ctx, args),
        Command::Bijection(args) => cmd_bijection(cli, &ctx, args),
        Command::Groebner(args) => cmd_groebner(cli, &ctx, args),
    }
}

#[derive(Serialize)]
struct HilbertValue {
    m: usize,
    value: String,
    provenance: &'static str,
}

#[derive(Serialize)]
struct HilbertPayload {
    values: Vec<HilbertValue>,
    #[serde(skip_serializing_if = "Option::is_none")]
    verified: Option<HilbertVerification>,
}

#[derive(Serialize)]
struct HilbertVerification {
    direct_agrees: bool,
    standard_monomial_count_agrees: bool,
}

fn cmd_hilbert(cli: &Cli, ctx: &Context, args: &HilbertArgs) -> Result<(), Failure> {
    let w = ctx.require_w()?;
    let series = hilbert::hilbert_series_inclusion_exclusion(&ctx.v, w, args.max)?;
    let mut verified = None;
    if cli.verify {
        let direct = hilbert::hilbert_series_direct(&ctx.v, w, args.max)?;
        let direct_agrees = direct == series;
        let mut sm_agrees = true;
        for (m, value) in series.iter().enumerate() {
            if standard::count_sm(&ctx.v, w, m)? != *value {
                sm_agrees = false;
            }
        }
        if !direct_agrees || !sm_agrees {
            return Err(Failure::Verification(format!(
                "hilbert values disagree between routes for v = {}, w = {}",
                ctx.v, w
            )));
        }
        verified = Some(HilbertVerification {
            direct_agrees,
            standard_monomial_count_agrees: sm_agrees,
        });
    }
    let mut table = format!("hilbert function for v = {}, w = {}\n", ctx.v, w);
    for (m, value) in series.iter().enumerate() {
        table.push_str(&format!("  h({}) = {}\n", m, value));
    }
    if verified.is_some() {
        table.push_str("  verified against direct count and standard-monomial count\n");
    }
    let values = series
        .iter()
        .enumerate()
        .map(|(m, value)| HilbertValue {
            m,
            value: value.to_string(),
            provenance: "inclusion_exclusion",
        })
        .collect();
    emit(cli, "hilbert", HilbertPayload { values, verified }, table);
    Ok(())
}

#[derive(Serialize)]
struct MultiplicityPayload {
    multiplicity: u64,
    provenance: &'static str,
    set_cardinality: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    families: Option<Vec<Vec<[usize; 2]>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    verified: Option<MultiplicityVerification>,
}

#[derive(Serialize)]
struct MultiplicityVerification {
    path_tuple_count: u64,
    max_cardinality_count: u64,
}

fn cmd_multiplicity(cli: &Cli, ctx: &Context, args: &MultiplicityArgs) -> Result<(), Failure> {
    let w = ctx.require_w()?;
    let family = hilbert::maximal_dominated(&ctx.v, w)?;
    let count = family.len() as u64;
    let mut verified = None;
    if cli.verify {
        let tuples = paths::enumerate_tuples(w, &ctx.v)?.len() as u64;
        let max_card = family
            .sets
            .iter()
            .filter(|s| s.len() == family.cardinality)
            .count() as u64;
        if tuples != count || max_card != count {
            return Err(Failure::Verification(format!(
                "multiplicity routes disagree: sets = {}, tuples = {}, max-cardinality = {}",
                count, tuples, max_card
            )));
        }
        verified = Some(MultiplicityVerification {
            path_tuple_count: tuples,
            max_cardinality_count: max_card,
        });
    }
    let mut table = format!(
        "multiplicity of the tangent cone at v = {} on the variety of w = {}: {}\n",
        ctx.v, w, count
    );
    table.push_str(&format!(
        "  maximal dominated sets have cardinality {}\n",
        family.cardinality
    ));
    if args.list {
        for (i, set) in family.sets.iter().enumerate() {
            let items: Vec<String> = set.iter().map(|r| r.to_string()).collect();
            table.push_str(&format!("  A{} = {{{}}}\n", i + 1, items.join(", ")));
        }
    }
    if verified.is_some() {
        table.push_str("  verified against path tuples and max-cardinality count\n");
    }
    let families = args.list.then(|| {
        family
            .sets
            .iter()
            .map(|set| set.iter().map(|r| [r.row, r.col]).collect())
            .collect()
    });
    emit(
        cli,
        "multiplicity",
        MultiplicityPayload {
            multiplicity: count,
            provenance: "maximal_dominated_sets",
            set_cardinality: family.cardinality,
            families,
            verified,
        },
        table,
    );
    Ok(())
}

#[derive(Serialize)]
struct PathsPayload {
    tuple_count: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    rendered_files: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    verified_multiplicity: Option<u64>,
}

fn cmd_paths(cli: &Cli, ctx: &Context, args: &PathsArgs) -> Result<(), Failure> {
    let w = ctx.require_w()?;
    let tuples = paths::enumerate_tuples(w, &ctx.v)?;
    let mut verified_multiplicity = None;
    if cli.verify {
        let mult = hilbert::multiplicity(&ctx.v, w)?;
        if mult != tuples.len() as u64 {
            return Err(Failure::Verification(format!(
                "tuple count {} disagrees with multiplicity {}",
                tuples.len(),
                mult
            )));
        }
        verified_multiplicity = Some(mult);
    }

    let mut table = if tuples.len() == 1 && tuples[0].is_empty() {
        format!(
            "0 paths, 1 empty tuple for v = {} (w = {} has empty distinguished set)\n",
            ctx.v, w
        )
    } else {
        format!(
            "{} non-intersecting path tuples for v = {}, w = {}\n",
            tuples.len(),
            ctx.v,
            w
        )
    };

    let mut rendered_files = None;
    match args.render {
        None => {}
        Some(RenderKind::Ascii) => {
            if !args.count_only {
                for (i, tuple) in tuples.iter().enumerate() {
                    table.push_str(&format!("tuple {}\n", i + 1));
                    table.push_str(&paths::render_ascii(w, &ctx.v, Some(tuple))?);
                    table.push('\n');
                }
            }
        }
        Some(RenderKind::Svg) => {
            let dir = cli
                .out
                .as_ref()
                .ok_or_else(|| Failure::Usage("--render svg needs --out DIR".into()))?;
            std::fs::create_dir_all(dir)
                .map_err(|e| Failure::Usage(format!("cannot create {}: {}", dir.display(), e)))?;
            let mut files = Vec::new();
            for (i, tuple) in tuples.iter().enumerate() {
                let svg = paths::render_svg(w, &ctx.v, Some(tuple))?;
                let name = format!("tuple_{:03}.svg", i + 1);
                let path = dir.join(&name);
                std::fs::write(&path, svg).map_err(|e| {
                    Failure::Usage(format!("cannot write {}: {}", path.display(), e))
                })?;
                files.push(name);
            }
            table.push_str(&format!("wrote {} SVG files to {}\n", files.len(), dir.display()));
            rendered_files = Some(files);
        }
    }
    if verified_multiplicity.is_some() {
        table.push_str("  verified against multiplicity\n");
    }
    emit(
        cli,
        "paths",
        PathsPayload {
            tuple_count: tuples.len(),
            rendered_files,
            verified_multiplicity,
        },
        table,
    );
    Ok(())
}

#[derive(Serialize)]
struct BijectionPayload {
    degree: usize,
    monomial_count: usize,
    standard_count: usize,
    round_trip_ok: bool,
    ok: bool,
}

fn cmd_bijection(cli: &Cli, ctx: &Context, args: &BijectionArgs) -> Result<(), Failure> {
    let w = ctx.require_w()?;
    let report = hilbert::bijection_report(&ctx.v, w, args.degree)?;
    let table = format!(
        "degree {}: {} monomials <-> {} standard monomials, round-trip {}\n",
        args.degree,
        report.monomial_count,
        report.standard_count,
        if report.round_trip_ok && report.image_is_exactly_standard_set {
            "OK"
        } else {
            "FAILED"
        }
    );
    let ok = report.ok();
    emit(
        cli,
        "bijection",
        BijectionPayload {
            degree: args.degree,
            monomial_count: report.monomial_count,
            standard_count: report.standard_count,
            round_trip_ok: report.round_trip_ok,
            ok,
        },
        table,
    );
    if !ok {
        return Err(Failure::Verification(format!(
            "bijection check failed at degree {} for v = {}, w = {}",
            args.degree, ctx.v, w
        )));
    }
    Ok(())
}

#[derive(Serialize)]
struct GroebnerPayload {
    families: Vec<u8>,
    minors_checked: usize,
    initial_terms_ok: bool,
    violations: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    reductions: Option<Vec<ReductionOutcome>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    standard_monomial_counts_match_hilbert: Option<bool>,
}

#[derive(Serialize)]
struct ReductionOutcome {
    theta: Vec<usize>,
    generators_used: usize,
}

fn cmd_groebner(cli: &Cli, ctx: &Context, args: &GroebnerArgs) -> Result<(), Failure> {
    let mut orders = Vec::new();
    for id in &args.families {
        orders.push(TermOrder::from_id(*id)?);
    }
    let report = minors::check_initial_terms(&ctx.v, None, &orders)?;
    let violations: Vec<String> = report
        .violations
        .iter()
        .map(|viol| {
            format!(
                "family {} at theta = {}: got {}, expected {}",
                viol.family, viol.theta, viol.got, viol.expected
            )
        })
        .collect();

    let mut reductions = None;
    if args.reduce {
        let w = ctx.require_w()?;
        let mut outcomes = Vec::new();
        for theta in schubert_core::grassmann::all_indices(ctx.v.d(), ctx.v.n()) {
            if theta.bruhat_leq(w)? {
                continue;
            }
            let cert = minors::verify_generator_reduction(&ctx.v, w, &theta)?;
            outcomes.push(ReductionOutcome {
                theta: theta.entries().to_vec(),
                generators_used: cert.combination.len(),
            });
        }
        reductions = Some(outcomes);
    }

    let mut counts_match = None;
    if cli.verify {
        let w = ctx.require_w()?;
        let mut all_match = true;
        for m in 0..=args.max {
            let nonmembers = minors::count_ideal_nonmembers(&ctx.v, w, m)?;
            let h = hilbert::hilbert_inclusion_exclusion(&ctx.v, w, m)?;
            if nonmembers != h {
                all_match = false;
            }
        }
        if !all_match {
            return Err(Failure::Verification(format!(
                "standard monomials of the initial ideal do not count the Hilbert function \
                 for v = {}, w = {}",
                ctx.v, w
            )));
        }
        counts_match = Some(all_match);
    }

    let ok = report.passed();
    let mut table = format!(
        "initial terms: checked {} (theta, family) pairs for v = {}: {}\n",
        report.checked,
        ctx.v,
        if ok { "all match" } else { "VIOLATIONS" }
    );
    for line in &violations {
        table.push_str(&format!("  {}\n", line));
    }
    if let Some(list) = &reductions {
        table.push_str(&format!(
            "  reduced {} minors outside w to the generating set\n",
            list.len()
        ));
    }
    if counts_match == Some(true) {
        table.push_str("  standard-monomial counts match the Hilbert function\n");
    }
    emit(
        cli,
        "groebner",
        GroebnerPayload {
            families: args.families.clone(),
            minors_checked: report.checked,
            initial_terms_ok: ok,
            violations,
            reductions,
            standard_monomial_counts_match_hilbert: counts_match,
        },
        table,
    );
    if !ok {
        return Err(Failure::Verification(format!(
            "initial terms disagree with the distinguished monomials for v = {}",
            ctx.v
        )));
    }
    Ok(())
}
