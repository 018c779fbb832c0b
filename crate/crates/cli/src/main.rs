use std::path::{Path, PathBuf};
use std::process::ExitCode;

use ado_core::envelope::{default_truncation, DEFAULT_MAX_AMBIENT};
use ado_core::format::{from_json_str, to_json_string};
use ado_core::{catalog, verify, AlgebraFile, Error, ErrorClass, LieAlgebra, Options, RepresentationFile};
use clap::{Args, Parser, Subcommand};

/// Environment variable overriding the cap on ambient monomials.
const MAX_AMBIENT_VAR: &str = "ADO_MAX_AMBIENT";

#[derive(Parser)]
#[command(name = "ado", version, about = "Faithful matrix representations of rational Lie algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build and verify a faithful representation.
    Compute(ComputeArgs),
    /// Re-check a representation file from its matrices alone.
    Verify { file: PathBuf },
    /// Built-in algebras.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Args)]
struct ComputeArgs {
    /// Algebra file (JSON).
    #[arg(required_unless_present = "catalog", conflicts_with = "catalog")]
    file: Option<PathBuf>,
    /// Use a catalog algebra instead of a file.
    #[arg(long)]
    catalog: Option<String>,
    /// Truncation degree M of the enveloping module (default k + 2).
    #[arg(long)]
    truncation: Option<usize>,
    /// Do not retry at M + 1 when the default truncation is not faithful.
    #[arg(long)]
    no_retry: bool,
    /// Embed the full expansion trace in the output.
    #[arg(long)]
    trace: bool,
    /// Output file; standard output when omitted.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum CatalogAction {
    List,
    Show { name: String },
}

const EXIT_INVALID: u8 = 1;
const EXIT_TRIPWIRE: u8 = 2;
const EXIT_UNVERIFIED: u8 = 3;

fn fail(err: &Error) -> ExitCode {
    eprintln!("{}", err.to_json());
    ExitCode::from(match err.class() {
        ErrorClass::InvalidInput => EXIT_INVALID,
        ErrorClass::Tripwire => EXIT_TRIPWIRE,
        ErrorClass::Verification => EXIT_UNVERIFIED,
    })
}

fn read(path: &Path) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))
}

fn write(path: Option<&Path>, text: &str) -> Result<(), Error> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| Error::Parse(format!("cannot write {}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn max_ambient() -> Result<usize, Error> {
    match std::env::var(MAX_AMBIENT_VAR) {
        Ok(v) => v.trim().parse().map_err(|_| Error::Parse(format!("{MAX_AMBIENT_VAR}={v:?} is not a count"))),
        Err(_) => Ok(DEFAULT_MAX_AMBIENT),
    }
}

fn load_algebra(args: &ComputeArgs) -> Result<LieAlgebra, Error> {
    match (&args.catalog, &args.file) {
        (Some(name), _) => catalog::lookup(name),
        (None, Some(path)) => from_json_str::<AlgebraFile>(&read(path)?)?.to_algebra(),
        (None, None) => Err(Error::Parse("no input algebra".into())),
    }
}

fn compute(args: ComputeArgs) -> Result<ExitCode, Error> {
    let algebra = load_algebra(&args)?;
    let options = Options { truncation: args.truncation, retry: !args.no_retry, max_ambient: max_ambient()? };
    let (rep, report) = ado_core::ado_representation(&algebra, &options)?;
    let prov = &rep.provenance;
    if let (Some(m), Some(k)) = (args.truncation, prov.nilpotency_index) {
        if m < default_truncation(k) {
            eprintln!(
                "warning: truncation {m} is below k + 2 = {} (the bound N > k + 2 under which faithfulness is guaranteed); \
                 faithfulness is checked after the fact",
                default_truncation(k)
            );
        }
    }
    let file = RepresentationFile::new(&rep, &report, args.trace);
    write(args.output.as_deref(), &to_json_string(&file))?;

    let summary = format!(
        "{}: dim {} -> {}x{} matrices ({} expansion step{}, enveloping module {}, reductive block {}); {}",
        rep.algebra.name(),
        rep.algebra.dim(),
        rep.dim_v,
        rep.dim_v,
        prov.steps.len(),
        if prov.steps.len() == 1 { "" } else { "s" },
        prov.env_dim,
        prov.reductive_dim,
        verdict(&report),
    );
    // Keep standard output clean for the file when no -o was given.
    if args.output.is_some() {
        println!("{summary}");
    } else {
        eprintln!("{summary}");
    }
    Ok(exit_for(&report))
}

fn verdict(report: &ado_core::VerificationReport) -> String {
    if !report.shape_ok {
        return "NOT VERIFIED: matrix shapes do not match".into();
    }
    match (report.homomorphic(), report.faithful()) {
        (true, true) => "verified: homomorphic and faithful".into(),
        (h, _) => {
            let mut parts = Vec::new();
            if !h {
                let bad = report.residuals.iter().filter(|r| r.nonzero_entries > 0).count();
                parts.push(format!("not a homomorphism ({bad} basis pairs with nonzero residual)"));
            }
            if report.kernel_dim > 0 {
                parts.push(format!("not faithful, kernel dim {}", report.kernel_dim));
            }
            format!("NOT VERIFIED: {}", parts.join("; "))
        }
    }
}

fn exit_for(report: &ado_core::VerificationReport) -> ExitCode {
    if report.verified() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_UNVERIFIED)
    }
}

fn verify_file(path: &Path) -> Result<ExitCode, Error> {
    let file: RepresentationFile = from_json_str(&read(path)?)?;
    let (algebra, dim_v, matrices) = file.parts()?;
    let report = verify(&algebra, dim_v, &matrices);
    println!("{}: {}x{} matrices; {}", algebra.name(), dim_v, dim_v, verdict(&report));
    if let Some(stored) = &file.verification {
        if stored.verified != report.verified() {
            eprintln!("warning: the stored verification summary disagrees with the recomputed one");
        }
    }
    Ok(exit_for(&report))
}

fn show(name: &str) -> Result<ExitCode, Error> {
    let g = catalog::lookup(name)?;
    println!("{} (dim {}): basis {}", g.name(), g.dim(), g.labels().join(", "));
    let mut any = false;
    for i in 0..g.dim() {
        for j in i + 1..g.dim() {
            let v = g.structure(i, j);
            if v.iter().any(|c| !num_is_zero(c)) {
                println!("[{}, {}] = {}", g.labels()[i], g.labels()[j], g.describe(v));
                any = true;
            }
        }
    }
    if !any {
        println!("all brackets are zero");
    }
    Ok(ExitCode::SUCCESS)
}

fn num_is_zero(c: &ado_core::Rational) -> bool {
    *c == ado_core::Rational::from(0)
}

fn main() -> ExitCode {
    // Usage errors are invalid input (exit 1); clap's own default of 2 would
    // collide with the tripwire code.
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_INVALID) } else { ExitCode::SUCCESS };
        }
    };
    let result = match cli.command {
        Command::Compute(args) => compute(args),
        Command::Verify { file } => verify_file(&file),
        Command::Catalog { action: CatalogAction::List } => {
            for name in catalog::NAMES {
                println!("{name}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Catalog { action: CatalogAction::Show { name } } => show(&name),
    };
    result.unwrap_or_else(|e| fail(&e))
}
