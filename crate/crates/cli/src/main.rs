//! `huffseq`: generate, analyse and compose Huffman sequences, and run the
//! two-mask imaging demonstrations.
//!
//! Exit status is 0 on success, 2 for usage, argument and input errors, and
//! 3 when a parameter lies outside a family's domain.

mod table;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use huffseq::algebra::{kron, outer, outer_power};
use huffseq::analysis::{self, CanonicalReport, CorrelationProfile};
use huffseq::decorrelate::{self, MaskKind};
use huffseq::families::fixtures::fixture_catalogue;
use huffseq::families::{generate, FamilySpec};
use huffseq::io::{self, Document};
use huffseq::scalar::parse_scalar;
use huffseq::{FamilyId, Grid, Scalar, Sequence, DEFAULT_TOL};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "huffseq", version, about = "Scalable Huffman sequence toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate one sequence as a JSON document.
    Gen(GenArgs),
    /// Correlation profile, condition check and metrics of a sequence.
    Analyze(AnalyzeArgs),
    /// Kronecker or outer product of two documents.
    Compose(ComposeArgs),
    /// Imaging-protocol demonstrations.
    #[command(subcommand)]
    Demo(Demo),
    /// List generator families and fixtures.
    List,
}

#[derive(Args)]
struct GenArgs {
    /// Family id, e.g. `fib`, `harb`, `h9a` or `fixture:b13`.
    #[arg(long, required_unless_present = "list")]
    family: Option<String>,
    /// Sequence length N (variable-length families only).
    #[arg(long)]
    n: Option<usize>,
    /// Scale parameter as `re` or `re,im`.
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    s: String,
    #[arg(long)]
    out: Option<PathBuf>,
    /// List the generator families and their admissible lengths.
    #[arg(long)]
    list: bool,
}

#[derive(Args)]
struct AnalyzeArgs {
    #[arg(long = "in")]
    input: PathBuf,
    /// Cyclic autocorrelation and the perfect-array test.
    #[arg(long, conflicts_with = "dual")]
    periodic: bool,
    /// Conjugate-free autocorrelation and the dual canonical test.
    #[arg(long)]
    dual: bool,
    /// Comma-separated subset of merit, flatness, peak.
    #[arg(long, value_delimiter = ',')]
    metrics: Vec<Metric>,
    /// Emit the profile as `lag,re,im` rows instead of JSON.
    #[arg(long)]
    csv: bool,
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Metric {
    Merit,
    Flatness,
    Peak,
}

#[derive(Clone, Copy, ValueEnum)]
enum Op {
    Kron,
    Outer,
}

#[derive(Args)]
struct ComposeArgs {
    #[arg(long)]
    op: Op,
    a: PathBuf,
    b: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct KernelArgs {
    #[arg(long, default_value = "fib")]
    family: String,
    #[arg(long, default_value_t = 19)]
    n: usize,
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    s: String,
    /// Number of outer-product factors in the kernel.
    #[arg(long, default_value_t = 2)]
    dim: usize,
}

#[derive(Subcommand)]
enum Demo {
    /// Pedestal versus split-sign mask dose for an outer-product array.
    Dose(KernelArgs),
    /// Blur a CSV object with split-sign masks and reconstruct it.
    Deblur {
        /// 2D real object: CSV with one row per line, or a JSON grid.
        #[arg(long)]
        object: PathBuf,
        #[command(flatten)]
        kernel: KernelArgs,
        /// Write the reconstruction as CSV.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Domain(String),
}

impl From<huffseq::Error> for Failure {
    fn from(e: huffseq::Error) -> Self {
        match e {
            huffseq::Error::Domain(_) | huffseq::Error::Range(_) => Failure::Domain(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome<T> = Result<T, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Gen(args) => gen(args),
        Command::Analyze(args) => analyze(args),
        Command::Compose(args) => compose(args),
        Command::Demo(Demo::Dose(args)) => demo_dose(args),
        Command::Demo(Demo::Deblur {
            object,
            kernel,
            out,
        }) => demo_deblur(&object, kernel, out),
        Command::List => {
            list_families();
            list_fixtures();
            Ok(())
        }
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn read(path: &Path) -> Outcome<String> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn read_document(path: &Path) -> Outcome<Document> {
    io::parse_document(&read(path)?).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn emit(text: &str, out: Option<&Path>) -> Outcome<()> {
    match out {
        Some(path) => fs::write(path, format!("{text}\n"))
            .map_err(|e| Failure::Usage(format!("{}: {e}", path.display()))),
        None => {
            say(text);
            Ok(())
        }
    }
}

/// Writes a line to stdout; a closed pipe ends the process quietly.
fn say(text: &str) {
    let mut out = std::io::stdout().lock();
    if writeln!(out, "{text}").is_err() {
        std::process::exit(0);
    }
}

fn spec_for(family: &str, n: Option<usize>, s: &str) -> Outcome<FamilySpec> {
    let family: FamilyId = family.parse()?;
    let s = parse_scalar(s)?;
    Ok(FamilySpec::new(family, n, s))
}

fn gen(args: GenArgs) -> Outcome<()> {
    if args.list {
        list_families();
        return Ok(());
    }
    let family = args.family.expect("clap enforces --family");
    let seq = generate(&spec_for(&family, args.n, &args.s)?)?;
    emit(&io::sequence_to_json(&seq), args.out.as_deref())
}

fn list_families() {
    say("families:");
    for id in FamilyId::generated() {
        say(&format!("  {:<12} N: {}", id.to_string(), id.length_rule()));
    }
}

fn list_fixtures() {
    say("fixtures (use --family fixture:<name>):");
    for info in fixture_catalogue() {
        say(&format!("  {:<18} {}", info.name, info.description));
    }
}

fn pair(z: Scalar) -> Value {
    json!([z.re, z.im])
}

fn report_json(r: &CanonicalReport) -> Value {
    json!({
        "passed": r.is_canonical,
        "tolerance": r.tolerance,
        "scale": r.scale,
        "worst_lag": r.worst_lag,
        "worst_residual": r.worst_residual,
    })
}

fn profile_json(p: &CorrelationProfile) -> Value {
    json!({
        "peak": pair(p.peak),
        "end_values": p.end_values.map(|(a, b)| json!([pair(a), pair(b)])),
        "max_interior_offpeak": p.max_interior_offpeak,
        "lags": p.lags().map(|(k, _)| k).collect::<Vec<_>>(),
        "values": p.values.iter().map(|&z| pair(z)).collect::<Vec<_>>(),
    })
}

/// JSON has no infinity; an unbounded merit factor is reported as null.
fn finite_or_null(x: f64) -> Value {
    if x.is_finite() {
        json!(x)
    } else {
        Value::Null
    }
}

fn analyze(args: AnalyzeArgs) -> Outcome<()> {
    if args.tol.is_nan() || args.tol <= 0.0 {
        return Err(Failure::Usage(format!(
            "--tol must be positive, got {}",
            args.tol
        )));
    }
    let seq = read_document(&args.input)?.into_sequence()?;
    if seq.len() < 2 {
        return Err(Failure::Usage("cannot analyse a length-1 sequence".into()));
    }

    let (kind, profile, report) = if args.periodic {
        (
            "periodic",
            analysis::periodic_autocorr(&seq)?,
            analysis::perfect_report(&seq, args.tol)?,
        )
    } else if args.dual {
        (
            "dual_aperiodic",
            analysis::dual_autocorr(&seq),
            analysis::is_dual_canonical(&seq, args.tol)?,
        )
    } else {
        (
            "aperiodic",
            analysis::autocorr(&seq),
            analysis::is_canonical(&seq, args.tol)?,
        )
    };

    if args.csv {
        let text = table::profile_csv(&profile).map_err(Failure::Usage)?;
        say(text.trim_end());
        return Ok(());
    }

    let mut metrics = serde_json::Map::new();
    for m in &args.metrics {
        match m {
            Metric::Merit => {
                metrics.insert(
                    "merit_factor".into(),
                    finite_or_null(analysis::merit_factor(&seq)?),
                );
            }
            Metric::Flatness => {
                metrics.insert(
                    "spectral_flatness".into(),
                    json!(analysis::spectral_flatness(&seq)?),
                );
            }
            Metric::Peak => {
                metrics.insert(
                    "peak_sidelobe_ratio".into(),
                    finite_or_null(analysis::peak_sidelobe_ratio(&seq)?),
                );
            }
        }
    }
    let condition = if args.periodic {
        "perfect"
    } else {
        "canonical"
    };
    let doc = json!({
        "version": io::FORMAT_VERSION,
        "family": seq.family().to_string(),
        "length": seq.len(),
        "kind": kind,
        "profile": profile_json(&profile),
        condition: report_json(&report),
        "metrics": metrics,
    });
    emit(&doc.to_string(), None)
}

fn compose(args: ComposeArgs) -> Outcome<()> {
    let a = read_document(&args.a)?;
    let b = read_document(&args.b)?;
    let text = match args.op {
        Op::Kron => io::sequence_to_json(&kron(&a.into_sequence()?, &b.into_sequence()?)),
        Op::Outer => io::grid_to_json(&outer(&a.into_sequence()?, &b.into_grid())),
    };
    emit(&text, args.out.as_deref())
}

fn kernel(args: &KernelArgs) -> Outcome<(Sequence, Grid)> {
    if args.dim == 0 {
        return Err(Failure::Usage("--dim must be at least 1".into()));
    }
    let seq = generate(&spec_for(&args.family, Some(args.n), &args.s)?)?;
    let grid = outer_power(&seq, args.dim)?;
    Ok((seq, grid))
}

/// Integral values print without a fractional part.
fn number(x: f64) -> Value {
    if x.fract() == 0.0 && x.abs() < 9.0e15 {
        json!(x as i64)
    } else {
        json!(x)
    }
}

fn demo_dose(args: KernelArgs) -> Outcome<()> {
    let (_, h) = kernel(&args)?;
    if !h.is_real(0.0) {
        return Err(Failure::Usage(
            "dose demo needs a real kernel; choose a real s".into(),
        ));
    }
    let kappa = decorrelate::minimal_pedestal(&h);
    let pedestal = decorrelate::dose(&decorrelate::pedestal_masks(&h, kappa)?);
    let split = decorrelate::dose(&decorrelate::split_signs(&h)?);
    let ratio = pedestal.total_dose / split.total_dose;
    eprintln!(
        "{} array {:?}: min {}, pedestal kappa {}",
        args.family,
        h.shape(),
        h.min_re(),
        kappa
    );
    eprintln!(
        "pedestal dose {:.0}, split-sign dose {:.0}, ratio {:.2}",
        pedestal.total_dose, split.total_dose, ratio
    );
    let doc = json!({
        "pedestal": number(pedestal.total_dose),
        "split": number(split.total_dose),
        "ratio": ratio,
        "kappa": number(kappa),
        "min": number(h.min_re()),
        "shape": h.shape(),
        "version": io::FORMAT_VERSION,
    });
    emit(&doc.to_string(), None)
}

fn demo_deblur(object: &Path, args: KernelArgs, out: Option<PathBuf>) -> Outcome<()> {
    let object = if object.extension().is_some_and(|e| e == "json") {
        read_document(object)?.into_grid()
    } else {
        table::parse_object(&read(object)?).map_err(Failure::Usage)?
    };
    let (_, h) = kernel(&args)?;
    if h.rank() > object.rank() {
        return Err(Failure::Usage(format!(
            "kernel rank {} exceeds the 2D object; use --dim 1 or 2",
            h.rank()
        )));
    }
    let masks = if h.is_real(0.0) {
        decorrelate::split_signs(&h)?
    } else {
        decorrelate::split_complex(&h)
    };
    let measured = decorrelate::measure(&object, &masks)?;
    let dual = masks.kind == MaskKind::SplitComplex;
    let rec = decorrelate::reconstruct(&measured, &h, dual)?;
    let err = decorrelate::recon_error(&object, &rec.object)?;
    if let Some(w) = &rec.warning {
        eprintln!("warning: {w}");
    }

    let p = rec.peak.norm();
    let max_o = object.max_abs();
    let ac = if dual {
        analysis::nd_dual_autocorr(&h.promote(object.rank())?)
    } else {
        analysis::nd_autocorr(&h.promote(object.rank())?)
    };
    let leak: f64 = ac.data().iter().map(|z| z.norm()).sum::<f64>() - p;
    eprintln!(
        "object {:?}, kernel {:?}, P = {p}: max error {:.3e} (separable bound {:.3e}), relative L2 {:.3e}",
        object.shape(),
        h.shape(),
        err.max_abs,
        leak * max_o / p,
        err.rel_l2
    );
    let doc = json!({
        "object_shape": object.shape(),
        "kernel_shape": h.shape(),
        "peak": pair(rec.peak),
        "max_abs_error": err.max_abs,
        "rel_l2_error": err.rel_l2,
        "bound_unit_ends": 2.0 * max_o / p,
        "bound_separable": leak * max_o / p,
        "warning": rec.warning,
        "version": io::FORMAT_VERSION,
    });
    if let Some(path) = out {
        let text = table::object_csv(&rec.object).map_err(Failure::Usage)?;
        fs::write(&path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    }
    emit(&doc.to_string(), None)
}
