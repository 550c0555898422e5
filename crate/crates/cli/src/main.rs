use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use uqzoo::cyclofield::parse;
use uqzoo::export::{export_comodule, export_form, export_hopf, to_json};
use uqzoo::suite::{run_suites, ModeName, Suite, SuiteConfig, SuiteReport};
use uqzoo::uqsl2::Sl2Context;
use uqzoo::zoo::{self, FamilyParams, FamilyTag};
use uqzoo::{CyclotomicField, Error};

#[derive(Parser)]
#[command(
    name = "uqzoo",
    version,
    about = "Exact checks for u_q(sl2), its graded version and their comodule algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification suites and write a claim-by-claim report.
    Verify(VerifyArgs),
    /// Print the table of Morita classes of comodule algebras.
    Classify(ClassifyArgs),
    /// Compare the computed minimal polynomial of αẼ + βF + γK⁻¹ with the closed formula.
    Minpoly(MinpolyArgs),
    /// Write an object as JSON.
    Export(ExportArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Exhaustive,
    Sampled,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long = "N", default_value_t = 3)]
    n: i64,
    /// Comma-separated suite names, or `all`.
    #[arg(long, default_value = "all")]
    suites: String,
    /// Defaults to exhaustive at N = 3 and sampled otherwise.
    #[arg(long, value_enum)]
    mode: Option<ModeArg>,
    #[arg(long, default_value_t = 10_000)]
    sample_count: usize,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Write the JSON report here.
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Keep per-claim timings in the report (makes it nondeterministic).
    #[arg(long)]
    timings: bool,
}

#[derive(Args)]
struct ClassifyArgs {
    #[arg(long = "N", default_value_t = 3)]
    n: i64,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct MinpolyArgs {
    #[arg(long = "N", default_value_t = 3)]
    n: i64,
    #[arg(long, allow_hyphen_values = true)]
    alpha: String,
    #[arg(long, allow_hyphen_values = true)]
    beta: String,
    #[arg(long, allow_hyphen_values = true)]
    gamma: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExportObject {
    #[value(name = "gr_uq")]
    GrUq,
    Uq,
    Sigma,
    Family,
}

#[derive(Args)]
struct ExportArgs {
    #[arg(value_enum)]
    object: ExportObject,
    #[arg(long = "N", default_value_t = 3)]
    n: i64,
    /// Family tag (L0, L1, L2, L3, L3N, L4) for `family`.
    #[arg(long)]
    tag: Option<String>,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    beta: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    xi: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    zeta: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    eta: Option<String>,
    /// Apply the cocycle deformation to the family.
    #[arg(long)]
    deformed: bool,
    /// Defaults to standard output.
    #[arg(long)]
    output: Option<PathBuf>,
}

enum Failure {
    Usage(String),
    Runtime(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidOrder(_) => Failure::Usage("N must be odd and > 1".into()),
            Error::InvalidArgument(_) | Error::Parse(_) => Failure::Usage(e.to_string()),
            _ => Failure::Runtime(e.to_string()),
        }
    }
}

fn check_n(n: i64) -> Result<usize, Failure> {
    if n < 3 || n % 2 == 0 {
        Err(Failure::Usage("N must be odd and > 1".into()))
    } else {
        Ok(n as usize)
    }
}

/// Prints a line; a closed pipe on the reader side is not an error.
fn emit(text: &str) {
    let _ = writeln!(io::stdout().lock(), "{text}");
}

fn write_out(path: Option<&PathBuf>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text)
            .map_err(|e| Failure::Runtime(format!("cannot write {}: {e}", p.display()))),
        None => {
            emit(text);
            Ok(())
        }
    }
}

fn report_text(report: &SuiteReport) -> String {
    let mut out = String::new();
    for c in &report.claims {
        let status = if c.passed() { "PASS" } else { "FAIL" };
        out.push_str(&format!("{status} {}  [{}]\n", c.claim_id, c.paper_anchor));
        if let Some(w) = &c.witness {
            out.push_str(&format!("     witness: {w}\n"));
        }
    }
    let s = report.summary;
    out.push_str(&format!(
        "{} claims: {} passed, {} failed",
        s.total, s.passed, s.failed
    ));
    out
}

fn verify(args: VerifyArgs) -> Result<(), Failure> {
    let n = check_n(args.n)?;
    let suites = Suite::parse_list(&args.suites)?;
    let mut config = SuiteConfig::new(n, suites);
    config.mode = match args.mode {
        Some(ModeArg::Exhaustive) => ModeName::Exhaustive,
        Some(ModeArg::Sampled) => ModeName::Sampled,
        None => config.mode,
    };
    config.sample_count = args.sample_count;
    config.seed = args.seed;
    config.validate()?;
    let mut report = run_suites(&config, |s, r| {
        let failed = r.claims.iter().filter(|c| !c.passed()).count();
        eprintln!("{s}: {} claims, {failed} failed", r.claims.len());
    })?;
    if !args.timings {
        for c in &mut report.claims {
            c.elapsed_ms = None;
        }
    }
    let json =
        serde_json::to_string_pretty(&report).map_err(|e| Failure::Runtime(e.to_string()))?;
    if let Some(p) = &args.output {
        write_out(Some(p), &json)?;
    }
    match args.format {
        Format::Json => emit(&json),
        Format::Text => emit(&report_text(&report)),
    }
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn classify(args: ClassifyArgs) -> Result<(), Failure> {
    let n = check_n(args.n)?;
    let table = zoo::classify(n)?;
    match args.format {
        Format::Json => emit(
            &serde_json::to_string_pretty(&table).map_err(|e| Failure::Runtime(e.to_string()))?,
        ),
        Format::Text => {
            emit(&format!("N = {}", table.n));
            for f in &table.families {
                emit(&format!("{} {}", f.tag, f.family));
                for (dom, (d, dim)) in f
                    .param_domain
                    .iter()
                    .zip(f.d_invariant.iter().zip(&f.dimension))
                {
                    let r = dom.r.map_or("-".to_string(), |r| r.to_string());
                    let params: Vec<String> = dom
                        .params
                        .iter()
                        .map(|p| format!("{}: {}", p.name, p.domain))
                        .collect();
                    emit(&format!(
                        "  r = {r}: params [{}], d = ({}, {}), dim = {}",
                        params.join(", "),
                        d.ratio,
                        d.socle_dim,
                        dim.dim
                    ));
                }
                emit(&format!("  canonical form: {}", f.canonical_rule));
            }
        }
    }
    Ok(())
}

fn minpoly(args: MinpolyArgs) -> Result<(), Failure> {
    let n = check_n(args.n)?;
    let ctx = Sl2Context::new(n as i64)?;
    let f = ctx.field();
    let (a, b, g) = (
        parse(f, &args.alpha)?,
        parse(f, &args.beta)?,
        parse(f, &args.gamma)?,
    );
    let (_, cmp) = zoo::verify_min_pol_lemma(&ctx, &a, &b, &g)?;
    emit(&format!("computed: {}", zoo::render_poly(&cmp.computed)));
    emit(&format!("formula:  {}", zoo::render_poly(&cmp.formula)));
    emit(&format!(
        "match: {}",
        if cmp.matches() { "yes" } else { "no" }
    ));
    if cmp.matches() {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn family_params(
    args: &ExportArgs,
    field: &std::sync::Arc<CyclotomicField>,
) -> Result<FamilyParams<uqzoo::Cyclo>, Failure> {
    let tag: FamilyTag = args
        .tag
        .as_deref()
        .ok_or_else(|| Failure::Usage("export family needs --tag".into()))?
        .parse()?;
    let num = |s: &Option<String>| s.as_deref().map(|s| parse(field, s)).transpose();
    let p = FamilyParams {
        family: tag,
        r: args
            .r
            .or((tag == FamilyTag::L3N).then_some(field.order() as usize)),
        alpha: num(&args.alpha)?,
        beta: num(&args.beta)?,
        xi: num(&args.xi)?,
        zeta: num(&args.zeta)?,
        eta: num(&args.eta)?,
    };
    p.validate(field.order() as usize)?;
    Ok(p)
}

fn export(args: ExportArgs) -> Result<(), Failure> {
    let n = check_n(args.n)?;
    let ctx = Sl2Context::new(n as i64)?;
    let doc = match args.object {
        ExportObject::GrUq => export_hopf(n, ctx.gr()),
        ExportObject::Uq => export_hopf(n, ctx.uq()?),
        ExportObject::Sigma => export_form(n, ctx.gr().labels(), ctx.sigma()),
        ExportObject::Family => {
            let p = family_params(&args, ctx.field())?;
            let a = if args.deformed {
                zoo::deform_family(&ctx, &p)?
            } else {
                zoo::build_family(&ctx, &p)?
            };
            export_comodule(n, &a)
        }
    };
    write_out(args.output.as_ref(), &to_json(&doc)?)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Verify(a) => verify(a),
        Command::Classify(a) => classify(a),
        Command::Minpoly(a) => minpoly(a),
        Command::Export(a) => export(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Runtime(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
    }
}
