//! Batch command-line frontend behind the `momentkit` binary.
//!
//! Input files are JSON with complex entries written as `[re, im]` pairs:
//!
//! ```text
//! subspace: {"n": 3, "vectors": [[[1,0],[1,0],[0,0]], [[0,0],[1,0],[1,0]]]}
//! matrix:   {"n": 2, "entries": [[[0,0],[0,-1]], [[0,1],[0,0]]]}
//! ```
//!
//! Exit codes: `0` success (or `MINIMAL`), `1` `NOT_MINIMAL`,
//! `2` `INDETERMINATE`, `3` any input or usage error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use nalgebra::DVector;
use serde::Deserialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::error::Error;
use crate::jnr::{fibonacci_directions, jnr_boundary, jnr_support, DensityMatrix};
use crate::linalg::{c, CMatrix, CVector, HermitianMatrix, HERMITIAN_TOL};
use crate::minimality::{
    check_minimal, hausdorff_moments, moments_intersect, FwOptions, IntersectionCertificate, MinimalityReport,
    DEFAULT_EIG_TOL,
};
use crate::moment::{ellipse_projection, sample_moment, support_moment, CurveFrame};
use crate::subspace::Subspace;

/// Exit code for malformed input, invalid parameters and usage errors.
pub const EXIT_INPUT: i32 = 3;
/// Environment variable capping the worker threads.
pub const THREADS_ENV: &str = "MOMENTKIT_THREADS";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}:{line}:{column}: {message}")]
    Parse {
        path: PathBuf,
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Library(#[from] Error),
}

type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(name = "momentkit", version, about = "Moment sets, joint numerical ranges and minimal hermitian matrices")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Seed for every random draw.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Feasibility tolerance on the diagonal-difference norm.
    #[arg(long, default_value_t = 1e-7)]
    pub tol: f64,
    #[arg(long, default_value_t = 50_000)]
    pub max_iter: usize,
    /// Output file; a `<out>.run.json` report is written next to it.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sample points |s|² of the moment set.
    MomentSample {
        #[arg(long)]
        subspace: PathBuf,
        #[arg(long, default_value_t = 1000)]
        count: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Trace the extremal curve joining two principal vectors (1-based indices).
    Curve {
        #[arg(long)]
        subspace: PathBuf,
        #[arg(long)]
        j: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 64)]
        steps: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Decide whether a hermitian matrix is minimal.
    MinimalCheck {
        #[arg(long)]
        matrix: PathBuf,
        /// Eigenspace threshold relative to the norm.
        #[arg(long, default_value_t = DEFAULT_EIG_TOL)]
        eig_tol: f64,
        #[command(flatten)]
        common: Common,
    },
    /// Decide whether the moments of two subspaces intersect.
    Intersect {
        #[arg(long)]
        v: PathBuf,
        #[arg(long)]
        w: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Support function of the moment set (or of the joint numerical range).
    Support {
        #[arg(long)]
        subspace: PathBuf,
        /// Comma-separated direction, e.g. `3,1,2`.
        #[arg(long, allow_hyphen_values = true)]
        c: String,
        #[arg(long)]
        jnr: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Boundary points of the joint numerical range.
    JnrBoundary {
        #[arg(long)]
        subspace: PathBuf,
        /// A JSON file of directions or `fibonacci:<k>`.
        #[arg(long, default_value = "fibonacci:200")]
        directions: String,
        #[command(flatten)]
        common: Common,
    },
    /// Centroid diag(P)/dim of the moment set.
    Centroid {
        #[arg(long)]
        subspace: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Support-function estimate of the Hausdorff distance between two moments.
    Hausdorff {
        #[arg(long)]
        v: PathBuf,
        #[arg(long)]
        w: PathBuf,
        #[arg(long, default_value = "fibonacci:500")]
        directions: String,
        #[command(flatten)]
        common: Common,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Self::MomentSample { .. } => "moment-sample",
            Self::Curve { .. } => "curve",
            Self::MinimalCheck { .. } => "minimal-check",
            Self::Intersect { .. } => "intersect",
            Self::Support { .. } => "support",
            Self::JnrBoundary { .. } => "jnr-boundary",
            Self::Centroid { .. } => "centroid",
            Self::Hausdorff { .. } => "hausdorff",
        }
    }

    fn common(&self) -> &Common {
        match self {
            Self::MomentSample { common, .. }
            | Self::Curve { common, .. }
            | Self::MinimalCheck { common, .. }
            | Self::Intersect { common, .. }
            | Self::Support { common, .. }
            | Self::JnrBoundary { common, .. }
            | Self::Centroid { common, .. }
            | Self::Hausdorff { common, .. } => common,
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SubspaceFile {
    n: usize,
    vectors: Vec<Vec<[f64; 2]>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixFile {
    n: usize,
    entries: Vec<Vec<[f64; 2]>>,
}

fn read(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn parse_json<T: for<'de> Deserialize<'de>>(path: &Path, text: &str) -> CliResult<T> {
    serde_json::from_str(text).map_err(|e| CliError::Parse {
        path: path.to_path_buf(),
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

fn complex_row(path: &Path, what: &str, row: &[[f64; 2]], n: usize) -> CliResult<CVector> {
    if row.len() != n {
        return Err(CliError::Invalid(format!(
            "{}: {what} has {} entries, expected n = {n}",
            path.display(),
            row.len()
        )));
    }
    if row.iter().flatten().any(|x| !x.is_finite()) {
        return Err(CliError::Invalid(format!("{}: {what} has a non-finite entry", path.display())));
    }
    Ok(CVector::from_iterator(n, row.iter().map(|&[re, im]| c(re, im))))
}

/// Parses a subspace file.
pub fn parse_subspace(path: &Path, text: &str) -> CliResult<Subspace> {
    let file: SubspaceFile = parse_json(path, text)?;
    if file.n == 0 {
        return Err(CliError::Invalid(format!("{}: n must be positive", path.display())));
    }
    let vectors = file
        .vectors
        .iter()
        .enumerate()
        .map(|(i, v)| complex_row(path, &format!("vector {}", i + 1), v, file.n))
        .collect::<CliResult<Vec<_>>>()?;
    if vectors.iter().all(|v| v.norm() == 0.0) {
        return Err(CliError::Invalid(format!("{}: no nonzero vector", path.display())));
    }
    Subspace::from_spanning(&vectors).map_err(CliError::from)
}

/// Parses a hermitian matrix file.
pub fn parse_matrix(path: &Path, text: &str) -> CliResult<HermitianMatrix> {
    let file: MatrixFile = parse_json(path, text)?;
    if file.entries.len() != file.n || file.n == 0 {
        return Err(CliError::Invalid(format!(
            "{}: expected {} rows, found {}",
            path.display(),
            file.n,
            file.entries.len()
        )));
    }
    let rows = file
        .entries
        .iter()
        .enumerate()
        .map(|(i, r)| complex_row(path, &format!("row {}", i + 1), r, file.n))
        .collect::<CliResult<Vec<_>>>()?;
    let m = CMatrix::from_fn(file.n, file.n, |i, j| rows[i][j]);
    HermitianMatrix::with_tolerance(m, HERMITIAN_TOL).map_err(CliError::from)
}

fn parse_vector(s: &str) -> CliResult<DVector<f64>> {
    let xs = s
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<f64>()
                .map_err(|e| CliError::Invalid(format!("bad number {t:?}: {e}")))
        })
        .collect::<CliResult<Vec<f64>>>()?;
    Ok(DVector::from_vec(xs))
}

/// `fibonacci:<k>` or a JSON file holding a list of real vectors.
fn parse_directions(arg: &str, n: usize, inputs: &mut Inputs) -> CliResult<Vec<DVector<f64>>> {
    if let Some(k) = arg.strip_prefix("fibonacci:") {
        let k: usize = k
            .parse()
            .map_err(|e| CliError::Invalid(format!("bad direction count {k:?}: {e}")))?;
        if k == 0 {
            return Err(CliError::Invalid("direction count must be positive".into()));
        }
        return Ok(fibonacci_directions(n, k));
    }
    let path = Path::new(arg);
    let text = inputs.read(path)?;
    let rows: Vec<Vec<f64>> = parse_json(path, &text)?;
    rows.into_iter()
        .enumerate()
        .map(|(i, r)| {
            if r.len() != n || r.iter().any(|x| !x.is_finite()) {
                return Err(CliError::Invalid(format!(
                    "{}: direction {} must have {n} finite entries",
                    path.display(),
                    i + 1
                )));
            }
            let v = DVector::from_vec(r);
            let norm = v.norm();
            if norm == 0.0 {
                return Err(CliError::Invalid(format!("{}: direction {} is zero", path.display(), i + 1)));
            }
            Ok(v / norm)
        })
        .collect()
}

/// Files read by a command, hashed into the run report.
#[derive(Default)]
struct Inputs {
    hasher: Sha256,
    files: Vec<String>,
}

impl Inputs {
    fn read(&mut self, path: &Path) -> CliResult<String> {
        let text = read(path)?;
        self.hasher.update(path.display().to_string().as_bytes());
        self.hasher.update([0]);
        self.hasher.update(text.as_bytes());
        self.hasher.update([0]);
        self.files.push(path.display().to_string());
        Ok(text)
    }

    fn subspace(&mut self, path: &Path) -> CliResult<Subspace> {
        let text = self.read(path)?;
        parse_subspace(path, &text)
    }

    fn digest(self, argv: &[String]) -> (String, Vec<String>) {
        let mut h = self.hasher;
        for a in argv {
            h.update(a.as_bytes());
            h.update([0]);
        }
        let mut hex = String::new();
        for b in h.finalize().iter() {
            let _ = write!(hex, "{b:02x}");
        }
        (hex, self.files)
    }
}

/// CSV float with 17 significant digits.
pub fn fmt_float(x: f64) -> String {
    format!("{x:.16e}")
}

fn csv_bytes(header: Vec<String>, rows: Vec<Vec<f64>>) -> CliResult<Vec<u8>> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let map = |e: csv::Error| CliError::Invalid(format!("csv: {e}"));
    w.write_record(&header).map_err(map)?;
    for r in rows {
        w.write_record(r.into_iter().map(fmt_float)).map_err(map)?;
    }
    w.into_inner().map_err(|e| CliError::Invalid(format!("csv: {e}")))
}

fn pairs(v: &CVector) -> Value {
    json!(v.iter().map(|z| [z.re, z.im]).collect::<Vec<_>>())
}

fn matrix_json(m: &CMatrix) -> Value {
    json!((0..m.nrows())
        .map(|i| (0..m.ncols()).map(|j| [m[(i, j)].re, m[(i, j)].im]).collect::<Vec<_>>())
        .collect::<Vec<_>>())
}

fn reals(v: &DVector<f64>) -> Value {
    json!(v.as_slice())
}

fn subspace_json(s: &Subspace) -> Value {
    json!({
        "n": s.ambient_dim(),
        "vectors": s.basis_vectors().iter().map(pairs).collect::<Vec<_>>(),
    })
}

fn density_json(d: &DensityMatrix) -> Value {
    matrix_json(d.as_matrix())
}

/// JSON form of an intersection certificate.
pub fn certificate_json(cert: &IntersectionCertificate) -> Value {
    json!({
        "status": cert.status.as_str(),
        "gap": cert.gap,
        "lower_bound": cert.lower_bound,
        "iterations": cert.iterations,
        "common": cert.common.as_ref().map(|p| reals(p.coords())),
        "direction": cert.separation.as_ref().map(|s| reals(&s.direction)),
        "margin": cert.separation.as_ref().map(|s| s.margin),
        "witness_y": cert.witnesses.as_ref().map(|w| density_json(&w.y)),
        "witness_x": cert.witnesses.as_ref().map(|w| density_json(&w.x)),
    })
}

/// JSON form of a minimality report.
pub fn report_json(r: &MinimalityReport) -> Value {
    json!({
        "verdict": r.verdict.as_str(),
        "norm": r.norm,
        "lambda_max": r.lambda_max,
        "lambda_min": r.lambda_min,
        "symmetric": r.symmetric,
        "v": subspace_json(&r.v),
        "w": subspace_json(&r.w),
        "top_gap": r.top_gap,
        "bottom_gap": r.bottom_gap,
        "certificate": r.certificate.as_ref().map(certificate_json),
    })
}

fn pretty(v: &Value) -> Vec<u8> {
    let mut s = serde_json::to_vec_pretty(v).expect("json values serialize");
    s.push(b'\n');
    s
}

struct Emitted {
    code: i32,
    /// Primary output.
    data: Vec<u8>,
    /// Extra files as `(suffix, bytes)`, written next to `--out`.
    sidecars: Vec<(&'static str, Vec<u8>)>,
}

impl Emitted {
    fn ok(data: Vec<u8>) -> Self {
        Self {
            code: 0,
            data,
            sidecars: Vec::new(),
        }
    }
}

fn sidecar_path(out: &Path, suffix: &str) -> PathBuf {
    let mut s = out.as_os_str().to_os_string();
    s.push(suffix);
    PathBuf::from(s)
}

fn write_file(path: &Path, bytes: &[u8]) -> CliResult<()> {
    std::fs::write(path, bytes).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn options(common: &Common) -> FwOptions {
    FwOptions {
        tol: common.tol,
        max_iter: common.max_iter,
        ..FwOptions::default()
    }
}

fn one_based(name: &str, i: usize) -> CliResult<usize> {
    i.checked_sub(1)
        .ok_or_else(|| CliError::Invalid(format!("--{name} is 1-based, got 0")))
}

fn execute(cmd: &Command, inputs: &mut Inputs) -> CliResult<Emitted> {
    let common = cmd.common();
    match cmd {
        Command::MomentSample { subspace, count, .. } => {
            let s = inputs.subspace(subspace)?;
            let header = (1..=s.ambient_dim()).map(|i| format!("x{i}")).collect();
            let rows = sample_moment(&s, *count, common.seed)
                .into_iter()
                .map(|p| p.coords().as_slice().to_vec())
                .collect();
            Ok(Emitted::ok(csv_bytes(header, rows)?))
        }
        Command::Curve { subspace, j, k, steps, .. } => {
            if common.out.is_none() {
                return Err(CliError::Invalid("curve needs --out for its ellipse sidecar".into()));
            }
            if *steps == 0 {
                return Err(CliError::Invalid("--steps must be positive".into()));
            }
            let s = inputs.subspace(subspace)?;
            let (j0, k0) = (one_based("j", *j)?, one_based("k", *k)?);
            if j0 == k0 {
                return Err(CliError::Invalid(format!("--j and --k must differ, both are {j}")));
            }
            if j0 >= s.ambient_dim() || k0 >= s.ambient_dim() {
                return Err(CliError::Invalid(format!("indices must lie in 1..={}", s.ambient_dim())));
            }
            let frame = CurveFrame::new(&s, j0, k0)?;
            let n = s.ambient_dim();
            let mut header = vec!["t".to_string()];
            header.extend((1..=n).map(|i| format!("x{i}")));
            header.push(format!("mod{j}"));
            header.push(format!("mod{k}"));
            let mut rows = Vec::with_capacity(steps + 1);
            for i in 0..=*steps {
                let t = std::f64::consts::FRAC_PI_2 * i as f64 / *steps as f64;
                let p = frame.point(t)?;
                let mut row = vec![t];
                row.extend(p.moment.coords().iter());
                row.push(p.vector[j0].norm());
                row.push(p.vector[k0].norm());
                rows.push(row);
            }
            let e = ellipse_projection(&s, j0, k0)?;
            let sidecar = json!({
                "j": j,
                "k": k,
                "a": e.a,
                "b": e.b,
                "t0": frame.t0,
                "segment": e.is_segment(),
            });
            Ok(Emitted {
                code: 0,
                data: csv_bytes(header, rows)?,
                sidecars: vec![(".ellipse.json", pretty(&sidecar))],
            })
        }
        Command::MinimalCheck { matrix, eig_tol, .. } => {
            let text = inputs.read(matrix)?;
            let m = parse_matrix(matrix, &text)?;
            let report = check_minimal(&m, *eig_tol, &options(common))?;
            Ok(Emitted {
                code: report.verdict.exit_code(),
                data: pretty(&report_json(&report)),
                sidecars: Vec::new(),
            })
        }
        Command::Intersect { v, w, .. } => {
            let (sv, sw) = (inputs.subspace(v)?, inputs.subspace(w)?);
            let cert = moments_intersect(&sv, &sw, &options(common))?;
            Ok(Emitted::ok(pretty(&certificate_json(&cert))))
        }
        Command::Support { subspace, c, jnr, .. } => {
            let s = inputs.subspace(subspace)?;
            let dir = parse_vector(c)?;
            let value = if *jnr {
                let sup = jnr_support(&s, &dir)?;
                json!({"set": "jnr", "value": sup.value, "witness": density_json(&sup.witness)})
            } else {
                let sup = support_moment(&s, &dir)?;
                json!({
                    "set": "moment",
                    "value": sup.value,
                    "maximizer": pairs(&sup.maximizer),
                    "point": reals(sup.point.coords()),
                    "spectral_gap": sup.spectral_gap,
                })
            };
            Ok(Emitted::ok(pretty(&value)))
        }
        Command::JnrBoundary { subspace, directions, .. } => {
            let s = inputs.subspace(subspace)?;
            let n = s.ambient_dim();
            let dirs = parse_directions(directions, n, inputs)?;
            let pts = jnr_boundary(&s, &dirs)?;
            let mut header: Vec<String> = (1..=n).map(|i| format!("c{i}")).collect();
            header.extend((1..=n).map(|i| format!("x{i}")));
            header.push("sum".into());
            let rows = dirs
                .iter()
                .zip(&pts)
                .map(|(d, p)| {
                    let mut r = d.as_slice().to_vec();
                    r.extend(p.x.iter());
                    r.push(p.sum());
                    r
                })
                .collect();
            Ok(Emitted::ok(csv_bytes(header, rows)?))
        }
        Command::Centroid { subspace, .. } => {
            let s = inputs.subspace(subspace)?;
            let value = json!({
                "n": s.ambient_dim(),
                "dim": s.dim(),
                "centroid": reals(&s.centroid().0),
            });
            Ok(Emitted::ok(pretty(&value)))
        }
        Command::Hausdorff { v, w, directions, .. } => {
            let (sv, sw) = (inputs.subspace(v)?, inputs.subspace(w)?);
            let dirs = parse_directions(directions, sv.ambient_dim(), inputs)?;
            let h = hausdorff_moments(&sv, &sw, &dirs)?;
            let value = json!({
                "estimate": h.estimate,
                "directions": dirs.len(),
                "projector_distance": h.projector_distance,
                "projector_distance_hs": h.projector_distance_hs,
                "hypothesis": h.hypothesis,
                "bound": h.bound,
                "bound_holds": h.bound_holds,
            });
            Ok(Emitted::ok(pretty(&value)))
        }
    }
}

fn configure_threads() -> CliResult<()> {
    let Ok(raw) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let k: usize = raw
        .trim()
        .parse()
        .map_err(|_| CliError::Invalid(format!("{THREADS_ENV} must be a positive integer, got {raw:?}")))?;
    if k == 0 {
        return Err(CliError::Invalid(format!("{THREADS_ENV} must be positive")));
    }
    // A second call in the same process keeps the first pool.
    let _ = rayon::ThreadPoolBuilder::new().num_threads(k).build_global();
    Ok(())
}

fn run_command(cli: &Cli, argv: &[String]) -> CliResult<i32> {
    configure_threads()?;
    let start = Instant::now();
    let cmd = &cli.command;
    let common = cmd.common();
    let mut inputs = Inputs::default();
    let emitted = execute(cmd, &mut inputs)?;

    let mut outputs = Vec::new();
    match &common.out {
        Some(out) => {
            write_file(out, &emitted.data)?;
            outputs.push(out.display().to_string());
            for (suffix, bytes) in &emitted.sidecars {
                let p = sidecar_path(out, suffix);
                write_file(&p, bytes)?;
                outputs.push(p.display().to_string());
            }
        }
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(&emitted.data)
                .and_then(|_| stdout.flush())
                .map_err(|source| CliError::Io {
                    path: PathBuf::from("<stdout>"),
                    source,
                })?;
        }
    }

    let (digest, files) = inputs.digest(argv);
    let report_path = common.out.as_ref().map(|o| sidecar_path(o, ".run.json"));
    if let Some(p) = &report_path {
        outputs.push(p.display().to_string());
    }
    let mut tolerances = json!({"tol": common.tol, "max_iter": common.max_iter});
    if let Command::MinimalCheck { eig_tol, .. } = cmd {
        tolerances["eig_tol"] = json!(eig_tol);
    }
    let report = json!({
        "command": cmd.name(),
        "argv": argv,
        "inputs": files,
        "inputs_digest": digest,
        "seed": common.seed,
        "tolerances": tolerances,
        "outputs": outputs,
        "exit_code": emitted.code,
        "wall_time_s": start.elapsed().as_secs_f64(),
    });
    match report_path {
        Some(p) => write_file(&p, &pretty(&report))?,
        None => eprintln!("{report}"),
    }
    Ok(emitted.code)
}

/// Parses `args` (including the program name), runs the command and returns
/// the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INPUT } else { 0 };
        }
    };
    let argv: Vec<String> = args.iter().map(|a| a.to_string_lossy().into_owned()).collect();
    match run_command(&cli, &argv) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_INPUT
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_subspace_and_reports_positions() {
        let p = Path::new("v.json");
        let s = parse_subspace(p, r#"{"n": 3, "vectors": [[[1,0],[1,0],[0,0]], [[0,0],[1,0],[1,0]]]}"#).unwrap();
        assert_eq!(s.dim(), 2);
        match parse_subspace(p, "{\"n\": 3,\n \"vectors\": [[[1,0],]]}") {
            Err(CliError::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse_subspace(p, r#"{"n": 2, "vectors": [[[1,0],[0,0],[0,0]]]}"#),
            Err(CliError::Invalid(_))
        ));
        assert!(matches!(parse_subspace(p, r#"{"n": 2, "vectors": [[[0,0],[0,0]]]}"#), Err(CliError::Invalid(_))));
    }

    #[test]
    fn parses_matrix() {
        let p = Path::new("m.json");
        let m = parse_matrix(p, r#"{"n": 2, "entries": [[[0,0],[0,-1]], [[0,1],[0,0]]]}"#).unwrap();
        assert_eq!(m.as_matrix()[(0, 1)], c(0.0, -1.0));
        assert!(matches!(
            parse_matrix(p, r#"{"n": 2, "entries": [[[0,0],[1,0]], [[2,0],[0,0]]]}"#),
            Err(CliError::Library(Error::NotHermitian { .. }))
        ));
    }

    #[test]
    fn floats_keep_seventeen_digits() {
        assert_eq!(fmt_float(1.0 / 3.0), "3.3333333333333331e-1");
        assert_eq!(fmt_float(1.0 / 3.0).parse::<f64>().unwrap(), 1.0 / 3.0);
    }

    #[test]
    fn directions_argument() {
        let mut inputs = Inputs::default();
        assert_eq!(parse_directions("fibonacci:7", 3, &mut inputs).unwrap().len(), 7);
        assert!(parse_directions("fibonacci:x", 3, &mut inputs).is_err());
        assert!(parse_directions("fibonacci:0", 3, &mut inputs).is_err());
    }
}
