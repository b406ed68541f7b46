use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;

use flag_gamma::checks::{self, CheckOutcome};
use flag_gamma::complex::{FaceComplexJson, FlagComplexJson};
use flag_gamma::example;
use flag_gamma::nestohedra::{
    self, BuildingSet, BuildingSetJson, CorollaryReport, FlagOrdering, OrderingJson,
};
use flag_gamma::subdivision::SequenceJson;
use flag_gamma::vectors::{f_poly, f_poly_of_faces};
use flag_gamma::{
    clique_number, FHGammaReport, FaceComplex, FlagComplex, IntPolynomial, SubdivisionSequence,
    VertexId, VertexSet,
};

/// Edge subdivisions of cross-polytope boundaries and their gamma complexes.
///
/// Exit status: 0 when every check passes, 1 when a mathematical check
/// fails, 2 on input errors.
#[derive(Parser, Debug)]
#[command(name = "flag-gamma", version)]
struct Cli {
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Replay the three-step example on Σ_3: K-sets, Γ and the verdict.
    Example,
    /// Check f(Γ) = γ on a sequence file or on random sequences (JSON lines).
    Verify {
        /// Sequence file `{"d": .., "steps": [{"edge": [a, b]}, ..]}`.
        file: Option<PathBuf>,
        /// D K SEED TRIALS: TRIALS random sequences of K steps on Σ_{D-1},
        /// trial i seeded with SEED + i.
        #[arg(long, num_args = 4, value_names = ["D", "K", "SEED", "TRIALS"], conflicts_with = "file")]
        random: Option<Vec<u64>>,
        /// Also run every structural property check.
        #[arg(long)]
        deep: bool,
    },
    /// Compare both gamma complexes of a flag ordering of a building set.
    Nestohedron {
        /// Building set `{"n": .., "elements": [[..], ..]}`.
        building_set: PathBuf,
        /// Ordering `{"decomposition": [[..]], "order": [[..]]}`; searched for if absent.
        ordering: Option<PathBuf>,
        /// Shuffle the search order of the ordering search.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// f, h and γ of a complex (edges or facets) or of a sequence's final complex.
    Gamma { file: PathBuf },
}

/// Failures caused by the input rather than by the mathematics.
struct InputError(anyhow::Error);

impl<E: Into<anyhow::Error>> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.into())
    }
}

type Run = Result<bool, InputError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(InputError(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Run {
    let mut out: Box<dyn Write> = match &cli.output {
        Some(path) => Box::new(BufWriter::new(
            File::create(path).with_context(|| format!("cannot create {}", path.display()))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    let passed = match &cli.command {
        Command::Example => cmd_example(cli.format, &mut out)?,
        Command::Verify { file, random, deep } => cmd_verify(
            file.as_deref(),
            random.as_deref(),
            *deep,
            cli.format,
            &mut out,
        )?,
        Command::Nestohedron {
            building_set,
            ordering,
            seed,
        } => cmd_nestohedron(
            building_set,
            ordering.as_deref(),
            *seed,
            cli.format,
            &mut out,
        )?,
        Command::Gamma { file } => cmd_gamma(file, cli.format, &mut out)?,
    };
    out.flush()?;
    Ok(passed)
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, InputError> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    let value =
        serde_json::from_str(&text).with_context(|| format!("cannot parse {}", path.display()))?;
    Ok(value)
}

fn write_json<T: Serialize>(out: &mut dyn Write, value: &T) -> io::Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)
}

fn names(vs: impl IntoIterator<Item = VertexId>) -> Vec<String> {
    vs.into_iter().map(example::label).collect()
}

#[derive(Serialize)]
struct KSetLine {
    step: usize,
    vertex: String,
    k_set: Vec<String>,
}

#[derive(Serialize)]
struct ExampleReport {
    k_sets: Vec<KSetLine>,
    gamma_vertices: Vec<String>,
    gamma_edges: Vec<[String; 2]>,
    f_gamma: IntPolynomial,
    gamma_theta: IntPolynomial,
    equal: bool,
}

fn cmd_example(format: Format, out: &mut dyn Write) -> Run {
    let seq = example::sequence();
    let mut k_sets = Vec::new();
    for j in 1..=seq.k() {
        let prefix = seq.prefix(j);
        for v in prefix.current().vertices() {
            k_sets.push(KSetLine {
                step: j,
                vertex: example::label(v),
                k_set: names(prefix.k_set(&VertexSet::from([v]))?),
            });
        }
    }
    let gamma = seq.gamma_complex();
    let verdict = seq.verify_main_theorem();
    let report = ExampleReport {
        k_sets,
        gamma_vertices: names(gamma.vertices()),
        gamma_edges: gamma
            .edges()
            .map(|(a, b)| [example::label(a), example::label(b)])
            .collect(),
        f_gamma: verdict.f_gamma,
        gamma_theta: verdict.gamma_theta,
        equal: verdict.equal,
    };
    match format {
        Format::Json => write_json(out, &report)?,
        Format::Table => {
            for line in &report.k_sets {
                writeln!(
                    out,
                    "K_Θ{}({{{}}}) = {{{}}}",
                    line.step,
                    line.vertex,
                    line.k_set.join(", ")
                )?;
            }
            writeln!(out, "Γ vertices: {}", report.gamma_vertices.join(", "))?;
            let edges: Vec<String> = report
                .gamma_edges
                .iter()
                .map(|[a, b]| format!("{{{a}, {b}}}"))
                .collect();
            writeln!(out, "Γ edges: {}", edges.join(", "))?;
            writeln!(out, "f(Γ) = {}", report.f_gamma)?;
            writeln!(out, "γ(Θ3) = {}", report.gamma_theta)?;
            writeln!(out, "equal: {}", report.equal)?;
        }
    }
    Ok(report.equal)
}

#[derive(Serialize)]
struct VerifyLine {
    index: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
    d: usize,
    k: usize,
    f_gamma: IntPolynomial,
    gamma_theta: IntPolynomial,
    equal: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    checks: Option<Vec<CheckOutcome>>,
    passed: bool,
}

fn verify_one(
    index: usize,
    seed: Option<u64>,
    seq: &SubdivisionSequence,
    deep: bool,
) -> VerifyLine {
    let report = seq.verify_main_theorem();
    let checks = deep.then(|| checks::run_all(seq));
    let passed = report.equal && checks.iter().flatten().all(|c| c.passed);
    VerifyLine {
        index,
        seed,
        d: report.d,
        k: report.k,
        f_gamma: report.f_gamma,
        gamma_theta: report.gamma_theta,
        equal: report.equal,
        error: report.error,
        checks,
        passed,
    }
}

fn cmd_verify(
    file: Option<&Path>,
    random: Option<&[u64]>,
    deep: bool,
    format: Format,
    out: &mut dyn Write,
) -> Run {
    let mut lines = Vec::new();
    match (file, random) {
        (Some(path), None) => {
            let json: SequenceJson = read_json(path)?;
            let seq = SubdivisionSequence::from_json(&json)
                .with_context(|| format!("invalid sequence in {}", path.display()))?;
            lines.push(verify_one(0, None, &seq, deep));
        }
        (None, Some(&[d, k, seed, trials])) => {
            for i in 0..trials {
                let s = seed.wrapping_add(i);
                let seq = SubdivisionSequence::random(d as usize, k as usize, s)?;
                let line = verify_one(i as usize, Some(s), &seq, deep);
                emit_verify_line(out, format, &line, i == 0)?;
                lines.push(line);
            }
            return Ok(lines.iter().all(|l| l.passed));
        }
        _ => {
            return Err(
                anyhow::anyhow!("give either a sequence file or --random D K SEED TRIALS").into(),
            )
        }
    }
    for (i, line) in lines.iter().enumerate() {
        emit_verify_line(out, format, line, i == 0)?;
    }
    Ok(lines.iter().all(|l| l.passed))
}

fn emit_verify_line(
    out: &mut dyn Write,
    format: Format,
    line: &VerifyLine,
    first: bool,
) -> io::Result<()> {
    match format {
        Format::Json => write_json(out, line),
        Format::Table => {
            if first {
                writeln!(out, "index\tseed\td\tk\tf(Γ)\tγ\tequal\tpassed")?;
            }
            let seed = line.seed.map_or("-".to_string(), |s| s.to_string());
            writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                line.index,
                seed,
                line.d,
                line.k,
                line.f_gamma,
                line.gamma_theta,
                line.equal,
                line.passed
            )?;
            for c in line.checks.iter().flatten().filter(|c| !c.passed) {
                writeln!(
                    out,
                    "\t{} failed: {}",
                    c.check,
                    c.detail.as_deref().unwrap_or("")
                )?;
            }
            Ok(())
        }
    }
}

#[derive(Serialize)]
struct NestohedronReport {
    n: u32,
    decomposition: Vec<Vec<u32>>,
    order: Vec<Vec<u32>>,
    #[serde(flatten)]
    report: CorollaryReport,
}

fn cmd_nestohedron(
    bs_path: &Path,
    ordering_path: Option<&Path>,
    seed: Option<u64>,
    format: Format,
    out: &mut dyn Write,
) -> Run {
    let json: BuildingSetJson = read_json(bs_path)?;
    let b = BuildingSet::from_json(&json)?;
    let ordering = match ordering_path {
        Some(path) => {
            let oj: OrderingJson = read_json(path)?;
            FlagOrdering::from_json(b, &oj)?
        }
        None => {
            let d = nestohedra::find_decomposition(&b)?;
            match seed {
                Some(s) => nestohedra::find_flag_ordering_seeded(&b, &d, s)?,
                None => nestohedra::find_flag_ordering(&b, &d)?,
            }
        }
    };
    let report = nestohedra::verify_corollary(&ordering)?;
    let passed = report.all_pass();
    let oj = ordering.to_json();
    let report = NestohedronReport {
        n: ordering.building_set().n(),
        decomposition: oj.decomposition,
        order: oj.order,
        report,
    };
    match format {
        Format::Json => write_json(out, &report)?,
        Format::Table => {
            let r = &report.report;
            writeln!(out, "n = {}, d = {}, k = {}", report.n, r.d, r.k)?;
            writeln!(out, "decomposition: {:?}", report.decomposition)?;
            writeln!(out, "order: {:?}", report.order)?;
            writeln!(out, "γ = {}", r.gamma_theta)?;
            writeln!(out, "f(Γ) = {}", r.f_gamma)?;
            writeln!(out, "f(Γ(O)) = {}", r.f_gamma_ordering)?;
            writeln!(out, "equal: {}", r.equal)?;
            writeln!(out, "isomorphic: {}", r.isomorphic)?;
            writeln!(out, "kset_rule: {}", r.kset_rule)?;
            writeln!(out, "bridge_sound: {}", r.bridge_sound)?;
        }
    }
    Ok(passed)
}

fn optional_d(value: &Value) -> Result<Option<usize>, InputError> {
    match value.get("d") {
        None => Ok(None),
        Some(d) => match d.as_u64() {
            Some(d) => Ok(Some(d as usize)),
            None => Err(anyhow::anyhow!("\"d\" must be a non-negative integer").into()),
        },
    }
}

fn cmd_gamma(path: &Path, format: Format, out: &mut dyn Write) -> Run {
    let value: Value = read_json(path)?;
    let report = if value.get("steps").is_some() {
        let json: SequenceJson = serde_json::from_value(value)?;
        let seq = SubdivisionSequence::from_json(&json)?;
        FHGammaReport::from_f(f_poly(seq.current(), seq.d())?, seq.d())?
    } else if value.get("facets").is_some() {
        let d = optional_d(&value)?;
        let json: FaceComplexJson = serde_json::from_value(value)?;
        let complex = FaceComplex::from(json);
        let d = d.unwrap_or_else(|| complex.facets().iter().map(|f| f.len()).max().unwrap_or(0));
        FHGammaReport::from_f(f_poly_of_faces(&complex), d)?
    } else if value.get("edges").is_some() {
        let d = optional_d(&value)?;
        let json: FlagComplexJson = serde_json::from_value(value)?;
        let complex = FlagComplex::try_from(json)?;
        let d = d.unwrap_or_else(|| clique_number(&complex));
        FHGammaReport::from_f(f_poly(&complex, d)?, d)?
    } else {
        return Err(anyhow::anyhow!("expected a sequence (\"steps\"), a face complex (\"facets\") or a flag complex (\"edges\")").into());
    };
    match format {
        Format::Json => write_json(out, &report)?,
        Format::Table => {
            writeln!(out, "d = {}", report.d)?;
            writeln!(out, "f = {}", report.f)?;
            writeln!(out, "h = {}", report.h)?;
            writeln!(out, "γ = {}", report.gamma)?;
            writeln!(out, "symmetric: {}", report.symmetric)?;
        }
    }
    Ok(true)
}
