use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use surgeon_cli::{bench, formats, init_threads, CliError, EngineKind, VERSION};
use surgeon_core::catalog;
use surgeon_core::distance::{code_distance, distance, subsystem_distance, DistanceReport};
use surgeon_core::products::{bb_code, gb_code, lcs_code, tensor_product, BivariatePoly, CirculantPoly, ClassicalCode};
use surgeon_core::surgery::logicals::light_irreducible_representatives;
use surgeon_core::surgery::{
    external_merge, internal_merge, merge_report, parallel_external_merge, parallel_single_qubit_measure, MergeOutcome,
    MergePair, MergeReport,
};
use surgeon_core::{Basis, BitVec, CssCode, SubsystemCode};

/// Code surgery on CSS codes: build codes, merge and measure logicals, check distances.
///
/// Codes are directories holding `px.txt` and `pz.txt`. Exit codes: 1 I/O,
/// 2 parse error, 3 precondition failure, 4 no monic span, 5 budget exceeded.
#[derive(Parser)]
#[command(name = "surgeon", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a code and print its parameters.
    Build(BuildArgs),
    /// Write light irreducible representatives of every logical class.
    Logicals(LogicalsArgs),
    /// External merge (two codes) or internal merge (one code, two logicals).
    Merge(MergeArgs),
    /// Measure one or more logicals in the chosen basis.
    Measure(MeasureArgs),
    /// Distance of a code, or dressed distance with gauge logicals.
    Distance(DistanceArgs),
    /// Run the sweeps of a TOML bench file.
    Bench(BenchArgs),
}

#[derive(Args, Clone)]
struct EngineArgs {
    #[arg(long, value_enum, default_value_t = EngineKind::Exhaustive)]
    engine: EngineKind,
    /// Information sets for the RIS engine.
    #[arg(long, default_value_t = surgeon_core::distance::DEFAULT_RIS_TRIALS)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Largest weight tried by the increment engine.
    #[arg(long)]
    max_weight: Option<usize>,
}

impl EngineArgs {
    fn engine(&self) -> surgeon_core::distance::Engine {
        self.engine.engine(self.trials, self.seed, self.max_weight)
    }
}

#[derive(Args)]
struct BuildArgs {
    #[command(subcommand)]
    family: FamilyArgs,
    /// Write px.txt and pz.txt here.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Also compute the distance.
    #[arg(long, global = true)]
    distance: bool,
    #[command(flatten)]
    engine: EngineArgs,
}

#[derive(Subcommand)]
enum FamilyArgs {
    /// A code of the small example set, or the toric code.
    Small {
        #[arg(long, value_parser = ["shor", "qrm", "steane", "rotated-surface", "surface", "toric"])]
        name: String,
    },
    /// Lift-connected surface code.
    Lcs {
        #[arg(long = "L", alias = "l")]
        l: usize,
        #[arg(long)]
        ell: usize,
    },
    /// Generalised bicycle code; polynomials like `1,x1,x14`.
    Gb {
        #[arg(long)]
        ell: usize,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Bivariate bicycle code; polynomials like `x3,y1,y2`.
    Bb {
        #[arg(long)]
        ell: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Tensor product of two classical codes, read as code files or `.alist`.
    Tensor {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
    },
}

#[derive(Args)]
struct LogicalsArgs {
    #[arg(long)]
    code: PathBuf,
    #[arg(long, default_value = "z", value_parser = parse_basis)]
    basis: Basis,
    /// Random information sets per class.
    #[arg(long, default_value_t = 200)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Directory for `<basis><i>.txt` files.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct MergeArgs {
    /// One code (internal merge) or two (external merge).
    #[arg(long, required = true, num_args = 1)]
    code: Vec<PathBuf>,
    /// Logical files. External merges pair them as u1 v1 u2 v2 … with `u` in the first code.
    #[arg(long, required = true, num_args = 1)]
    logical: Vec<PathBuf>,
    #[command(flatten)]
    common: SurgeryArgs,
}

#[derive(Args)]
struct MeasureArgs {
    #[arg(long)]
    code: PathBuf,
    #[arg(long, required = true, num_args = 1)]
    logical: Vec<PathBuf>,
    #[command(flatten)]
    common: SurgeryArgs,
}

#[derive(Args)]
struct SurgeryArgs {
    #[arg(long, default_value = "z", value_parser = parse_basis)]
    basis: Basis,
    #[arg(long, default_value_t = 1)]
    depth: usize,
    /// Compute the dressed distance of the result.
    #[arg(long)]
    subsystem: bool,
    /// Write the resulting px.txt and pz.txt here.
    #[arg(long)]
    out: Option<PathBuf>,
    #[command(flatten)]
    engine: EngineArgs,
}

#[derive(Args)]
struct DistanceArgs {
    #[arg(long)]
    code: PathBuf,
    /// One basis only; both by default.
    #[arg(long, value_parser = parse_basis)]
    basis: Option<Basis>,
    /// Z gauge logical files.
    #[arg(long, num_args = 1)]
    gauge_z: Vec<PathBuf>,
    /// X gauge logical files.
    #[arg(long, num_args = 1)]
    gauge_x: Vec<PathBuf>,
    #[command(flatten)]
    engine: EngineArgs,
}

#[derive(Args)]
struct BenchArgs {
    spec: PathBuf,
    /// Also write the machine-readable report here.
    #[arg(long)]
    json: Option<PathBuf>,
}

fn parse_basis(s: &str) -> Result<Basis, String> {
    s.parse().map_err(|e: surgeon_core::Error| e.to_string())
}

#[derive(Serialize)]
struct BuildReport {
    version: &'static str,
    code: String,
    n: usize,
    k: usize,
    omega: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    distance: Option<DistanceReport>,
}

#[derive(Serialize)]
struct SurgeryReport {
    version: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
    #[serde(flatten)]
    report: MergeReport,
}

#[derive(Serialize)]
struct DistanceOutput {
    version: &'static str,
    #[serde(flatten)]
    report: DistanceReport,
}

#[derive(Serialize)]
struct LogicalsOutput {
    version: &'static str,
    basis: Basis,
    seed: u64,
    supports: Vec<Option<Vec<usize>>>,
}

/// Writes to stdout; a closed pipe is not an error.
fn emit(text: &str) -> Result<(), CliError> {
    use std::io::Write;
    match std::io::stdout().lock().write_all(text.as_bytes()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(CliError::Io(format!("stdout: {e}"))),
        _ => Ok(()),
    }
}

fn print_json<T: Serialize>(value: &T) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(value).map_err(|e| CliError::Io(e.to_string()))?;
    emit(&format!("{text}\n"))
}

fn parse_param<T>(r: surgeon_core::Result<T>) -> Result<T, CliError> {
    r.map_err(|e| CliError::Parse(e.to_string()))
}

fn build(args: BuildArgs) -> Result<(), CliError> {
    let (name, code) = match &args.family {
        FamilyArgs::Small { name } => {
            let code = match name.as_str() {
                "shor" => catalog::shor(),
                "qrm" => catalog::quantum_reed_muller(),
                "steane" => catalog::steane(),
                "rotated-surface" => catalog::rotated_surface(),
                "surface" => catalog::unrotated_surface(),
                _ => catalog::toric(),
            };
            (name.clone(), code)
        }
        FamilyArgs::Lcs { l, ell } => (format!("lcs({l},{ell})"), parse_param(lcs_code(*l, *ell))?),
        FamilyArgs::Gb { ell, a, b } => {
            let (a, b) = (parse_param(CirculantPoly::parse(a, *ell))?, parse_param(CirculantPoly::parse(b, *ell))?);
            (format!("gb({ell})"), parse_param(gb_code(*ell, &a, &b))?)
        }
        FamilyArgs::Bb { ell, m, a, b } => {
            let a = parse_param(BivariatePoly::parse(a, *ell, *m))?;
            let b = parse_param(BivariatePoly::parse(b, *ell, *m))?;
            (format!("bb({ell},{m})"), parse_param(bb_code(*ell, *m, &a, &b))?)
        }
        FamilyArgs::Tensor { a, b } => {
            let a = ClassicalCode::new(formats::read_matrix(a)?);
            let b = ClassicalCode::new(formats::read_matrix(b)?);
            ("tensor".to_string(), tensor_product(&a, &b))
        }
    };
    if let Some(dir) = &args.out {
        formats::write_code(dir, &code)?;
    }
    let distance = if args.distance { Some(code_distance(&code, &args.engine.engine())?) } else { None };
    print_json(&BuildReport { version: VERSION, code: name, n: code.n(), k: code.num_logicals(), omega: code.omega(), distance })
}

fn logicals(args: LogicalsArgs) -> Result<(), CliError> {
    let code = formats::read_code(&args.code)?;
    if code.num_logicals() == 0 {
        return Err(CliError::Precondition("no logicals".into()));
    }
    let reps = light_irreducible_representatives(&code, args.basis, &code.homology_basis(args.basis), args.trials, args.seed);
    std::fs::create_dir_all(&args.out).map_err(|e| CliError::Io(format!("{}: {e}", args.out.display())))?;
    for (i, rep) in reps.iter().enumerate() {
        if let Some(v) = rep {
            formats::write_logical(&args.out.join(format!("{}{i}.txt", args.basis)), v)?;
        }
    }
    let supports = reps.iter().map(|r| r.as_ref().map(BitVec::support)).collect();
    print_json(&LogicalsOutput { version: VERSION, basis: args.basis, seed: args.seed, supports })
}

fn read_logicals(paths: &[PathBuf], code: &CssCode) -> Result<Vec<BitVec>, CliError> {
    paths
        .iter()
        .map(|p| {
            let v = formats::read_logical(p)?;
            if v.len() != code.n() {
                return Err(CliError::Precondition(format!("{}: length {} differs from n = {}", p.display(), v.len(), code.n())));
            }
            Ok(v)
        })
        .collect()
}

fn finish(outcome: MergeOutcome, args: &SurgeryArgs) -> Result<(), CliError> {
    if let Some(dir) = &args.out {
        formats::write_code(dir, &outcome.code)?;
    }
    let mut report = merge_report(&outcome);
    let mut seed = None;
    if args.subsystem {
        report.subsystem_distance = Some(subsystem_distance(&outcome.subsystem, None, &args.engine.engine())?);
        seed = (args.engine.engine == EngineKind::Ris).then_some(args.engine.seed);
    }
    print_json(&SurgeryReport { version: VERSION, seed, report })
}

fn merge(args: MergeArgs) -> Result<(), CliError> {
    let common = &args.common;
    let codes = args.code.iter().map(|p| formats::read_code(p)).collect::<Result<Vec<_>, _>>()?;
    let outcome = match codes.as_slice() {
        [code] => {
            let [u, v] = read_logicals(&args.logical, code)?
                .try_into()
                .map_err(|_| CliError::Precondition("an internal merge takes exactly two logicals".into()))?;
            internal_merge(code, &u, &v, common.basis, common.depth)?
        }
        [c, d] => {
            if !args.logical.len().is_multiple_of(2) {
                return Err(CliError::Precondition("an external merge takes logicals in pairs".into()));
            }
            let mut pairs = Vec::new();
            for pair in args.logical.chunks(2) {
                let u = read_logicals(&pair[..1], c)?.remove(0);
                let v = read_logicals(&pair[1..], d)?.remove(0);
                pairs.push(MergePair::new(u, v));
            }
            if pairs.len() == 1 {
                external_merge(c, d, &pairs[0].u, &pairs[0].v, common.basis, common.depth)?
            } else {
                parallel_external_merge(c, d, &pairs, common.basis, common.depth)?
            }
        }
        _ => return Err(CliError::Precondition("merge takes one or two codes".into())),
    };
    finish(outcome.ok_or(CliError::NoSpan)?, common)
}

fn measure(args: MeasureArgs) -> Result<(), CliError> {
    let code = formats::read_code(&args.code)?;
    let logicals = read_logicals(&args.logical, &code)?;
    let outcome = parallel_single_qubit_measure(&code, &logicals, args.common.basis, args.common.depth)?;
    finish(outcome, &args.common)
}

fn distance_cmd(args: DistanceArgs) -> Result<(), CliError> {
    let code = formats::read_code(&args.code)?;
    let engine = args.engine.engine();
    let report = if args.gauge_z.is_empty() && args.gauge_x.is_empty() {
        match args.basis {
            Some(b) => distance(&code, b, &engine)?,
            None => code_distance(&code, &engine)?,
        }
    } else {
        let gauge_z = read_logicals(&args.gauge_z, &code)?;
        let gauge_x = read_logicals(&args.gauge_x, &code)?;
        let sub = SubsystemCode::new(code, gauge_z, gauge_x)?;
        subsystem_distance(&sub, args.basis, &engine)?
    };
    print_json(&DistanceOutput { version: VERSION, report })
}

fn bench_cmd(args: BenchArgs) -> Result<(), CliError> {
    let text = std::fs::read_to_string(&args.spec).map_err(|e| CliError::Io(format!("{}: {e}", args.spec.display())))?;
    let report = bench::run(&bench::BenchSpec::parse(&text)?)?;
    emit(&bench::render(&report))?;
    if let Some(path) = &args.json {
        let text = serde_json::to_string_pretty(&report).map_err(|e| CliError::Io(e.to_string()))?;
        write_text(path, &text)?;
    }
    Ok(())
}

fn write_text(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, format!("{text}\n")).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = init_threads().and_then(|()| match cli.command {
        Command::Build(args) => build(args),
        Command::Logicals(args) => logicals(args),
        Command::Merge(args) => merge(args),
        Command::Measure(args) => measure(args),
        Command::Distance(args) => distance_cmd(args),
        Command::Bench(args) => bench_cmd(args),
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
