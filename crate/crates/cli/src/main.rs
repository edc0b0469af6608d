use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use filliman::chains::find_witness;
use filliman::convex::polygon_cycle;
use filliman::duality::sigma_histogram;
use filliman::io::{format_point, format_rational, input_from_json, parse_point, ChainRecord, Input};
use filliman::random::random_point;
use filliman::transforms::{direct_polytope_volume, generic_functional};
use filliman::{
    fan_triangulation, filliman_volume, fourier, lawrence_volume, measure_equal, phi, phi_polytope, polar_body,
    random_refine, sigma, Error, ExactChain, ExactPoint, ExactPolytope, MeasureVerdict, SampleSource, VolumeMethod,
};

mod render;

#[derive(Parser, Debug)]
#[command(name = "filliman", version, about = "Polar duality of signed simplicial chains")]
struct JobConfig {
    #[command(subcommand)]
    command: Command,
    /// Seed for every randomized step.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Generic sample points per measure comparison.
    #[arg(long, global = true, default_value_t = 1000)]
    samples: usize,
    /// Output file (chain JSON for dualize, SVG for render).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Apply the duality to a chain, or to a triangulation of a polytope.
    Dualize { input: PathBuf },
    /// Exact volume of a polytope.
    Volume {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Direct)]
        method: Method,
    },
    /// Check an identity; exits 1 with a witness when it fails.
    Verify {
        input: PathBuf,
        /// Second chain for `--check equal`.
        other: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Check::Involution)]
        check: Check,
    },
    /// Fourier transform of the measure at the given frequencies.
    Fourier {
        input: PathBuf,
        /// Frequency as comma-separated rationals; repeatable.
        #[arg(long = "freq")]
        freqs: Vec<String>,
    },
    /// Draw a planar chain as SVG.
    Render {
        input: PathBuf,
        /// `xmin,ymin,xmax,ymax`; defaults to the padded bounding box.
        #[arg(long)]
        viewport: Option<String>,
        /// Pixels per unit.
        #[arg(long, default_value_t = 100.0)]
        scale: f64,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Method {
    Direct,
    Filliman,
    Lawrence,
}

#[derive(Clone, Copy, Debug, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Check {
    Involution,
    Polar,
    Split,
    Equal,
}

#[derive(Serialize, Debug, Default)]
struct Report {
    command: &'static str,
    status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    check: Option<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    method: Option<VolumeMethod>,
    #[serde(skip_serializing_if = "Option::is_none")]
    value: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    term_count: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    sigma_histogram: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    samples: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    chain: Option<ChainRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    output: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<Value>,
}

/// A failed run: precondition errors exit 2.
#[derive(Debug)]
struct Failure {
    kind: String,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure { kind: e.kind().to_string(), message: e.to_string() }
    }
}

fn io_failure(path: &std::path::Path, e: std::io::Error) -> Failure {
    Failure { kind: "io".into(), message: format!("{}: {e}", path.display()) }
}

type Outcome = Result<Report, Failure>;

fn read_input(path: &std::path::Path) -> Result<Input, Failure> {
    let text = fs::read_to_string(path).map_err(|e| io_failure(path, e))?;
    Ok(input_from_json(&text)?)
}

/// Chains pass through; polytopes become a vertex-fan triangulation.
fn as_chain(input: Input) -> Result<ExactChain, Failure> {
    match input {
        Input::Chain(c) => Ok(c),
        Input::Polytope(p) => Ok(fan_triangulation(&p, &p.vertices()[0])?.chain),
    }
}

fn as_polytope(input: Input, command: &str) -> Result<ExactPolytope, Failure> {
    match input {
        Input::Polytope(p) => Ok(p),
        Input::Chain(_) => Err(Failure { kind: "expected_polytope".into(), message: format!("{command} needs a polytope file") }),
    }
}

fn point_json(p: &ExactPoint) -> Value {
    json!(format_point(p))
}

/// Compares two chains; on a moment mismatch still samples for a witness.
fn compare(a: &ExactChain, b: &ExactChain, samples: usize, source: &SampleSource) -> Result<Option<Option<ExactPoint>>, Failure> {
    match measure_equal(a, b, samples, source)? {
        MeasureVerdict::Equal { .. } => Ok(None),
        MeasureVerdict::Unequal { witness: Some(w) } => Ok(Some(Some(w))),
        MeasureVerdict::Unequal { witness: None } => {
            let diff = a.sub(b)?;
            let Some((lo, hi)) = diff.bounding_box() else {
                return Ok(Some(None));
            };
            Ok(Some(find_witness(&diff, &lo, &hi, samples, source)?))
        }
    }
}

fn verdict(mut report: Report, found: Option<Option<ExactPoint>>) -> Report {
    match found {
        None => report.status = "ok",
        Some(w) => {
            report.status = "violation";
            report.witness = Some(w.as_ref().map_or(Value::Null, point_json));
        }
    }
    report
}

fn dualize(cfg: &JobConfig, input: &std::path::Path) -> Outcome {
    let mut source = SampleSource::new(cfg.seed);
    let image = match read_input(input)? {
        Input::Chain(c) => phi(&c)?,
        Input::Polytope(p) => phi_polytope(&p, &mut source)?,
    };
    let mut report = Report {
        command: "dualize",
        status: "ok",
        value: Some(json!(format_rational(&image.total_measure()))),
        term_count: Some(image.len()),
        sigma_histogram: Some(sigma_histogram(&image)?),
        ..Report::default()
    };
    match &cfg.out {
        Some(path) => {
            fs::write(path, filliman::io::chain_to_json(&image) + "\n").map_err(|e| io_failure(path, e))?;
            report.output = Some(path.display().to_string());
        }
        None => report.chain = Some(ChainRecord::from_chain(&image)),
    }
    Ok(report)
}

fn volume(cfg: &JobConfig, input: &std::path::Path, method: Method) -> Outcome {
    let p = as_polytope(read_input(input)?, "volume")?;
    let mut source = SampleSource::new(cfg.seed);
    let r = match method {
        Method::Direct => direct_polytope_volume(&p),
        Method::Filliman => filliman_volume(&p, &mut source)?,
        Method::Lawrence => {
            let c = generic_functional(&p, &mut source)?;
            lawrence_volume(&p, &c)?
        }
    };
    Ok(Report {
        command: "volume",
        status: "ok",
        method: Some(r.method),
        value: Some(json!(format_rational(&r.value))),
        term_count: Some(r.term_count),
        ..Report::default()
    })
}

fn verify(cfg: &JobConfig, input: &std::path::Path, other: Option<&std::path::Path>, check: Check) -> Outcome {
    let mut source = SampleSource::new(cfg.seed);
    let base = Report { command: "verify", status: "ok", check: Some(check), samples: Some(cfg.samples), ..Report::default() };
    let first = read_input(input)?;
    let found = match check {
        Check::Involution => {
            let c = as_chain(first)?;
            let back = phi(&phi(&c)?)?;
            compare(&back, &c, cfg.samples, &source)?
        }
        Check::Polar => {
            let p = as_polytope(first, "verify --check polar")?;
            let polar = polar_body(&p)?;
            let image = phi_polytope(&p, &mut source)?;
            let direct = fan_triangulation(&polar, &polar.vertices()[0])?.chain;
            compare(&image, &direct, cfg.samples, &source)?
        }
        Check::Split => {
            let c = as_chain(first)?;
            let refined = random_refine(&c, 2 * c.dim() + 2, &mut source, true)?;
            match compare(&refined, &c, cfg.samples, &source)? {
                None => compare(&phi(&refined)?, &phi(&c)?, cfg.samples, &source)?,
                found => found,
            }
        }
        Check::Equal => {
            let other = other.ok_or_else(|| Failure { kind: "missing_input".into(), message: "--check equal needs two inputs".into() })?;
            let a = as_chain(first)?;
            let b = as_chain(read_input(other)?)?;
            compare(&a, &b, cfg.samples, &source)?
        }
    };
    Ok(verdict(base, found))
}

fn fourier_cmd(cfg: &JobConfig, input: &std::path::Path, freqs: &[String]) -> Outcome {
    let c = as_chain(read_input(input)?)?;
    let d = c.dim();
    let xis: Vec<ExactPoint> = if freqs.is_empty() {
        vec![random_point(d, 4, &mut SampleSource::with_denominator(cfg.seed, 64))?]
    } else {
        freqs
            .iter()
            .map(|f| parse_point(&f.split(',').map(str::to_string).collect::<Vec<_>>(), d))
            .collect::<Result<_, _>>()?
    };
    let values = xis
        .iter()
        .map(|xi| {
            let v = fourier(&c, xi)?.value;
            Ok(json!({ "frequency": point_json(xi), "re": v.re, "im": v.im }))
        })
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(Report { command: "fourier", status: "ok", value: Some(Value::Array(values)), term_count: Some(c.len()), ..Report::default() })
}

fn render_cmd(cfg: &JobConfig, input: &std::path::Path, viewport: Option<&str>, scale: f64) -> Outcome {
    let parsed = read_input(input)?;
    let outline = match &parsed {
        Input::Polytope(p) if p.dim() == 2 => Some(polygon_cycle(p)),
        _ => None,
    };
    let c = as_chain(parsed)?;
    if c.dim() != 2 {
        return Err(Error::DimensionMismatch { expected: 2, found: c.dim() }.into());
    }
    let viewport = viewport.map(render::parse_viewport).transpose()?;
    let sigmas = c.terms().iter().map(|t| sigma(&t.simplex).ok().map(|s| s.0)).collect::<Vec<_>>();
    let svg = render::svg(&c, &sigmas, outline.as_deref(), viewport, scale)?;
    let path = cfg.out.as_ref().ok_or_else(|| Failure { kind: "missing_output".into(), message: "render needs --out".into() })?;
    fs::write(path, svg).map_err(|e| io_failure(path, e))?;
    Ok(Report {
        command: "render",
        status: "ok",
        term_count: Some(c.len()),
        output: Some(path.display().to_string()),
        ..Report::default()
    })
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Dualize { .. } => "dualize",
        Command::Volume { .. } => "volume",
        Command::Verify { .. } => "verify",
        Command::Fourier { .. } => "fourier",
        Command::Render { .. } => "render",
    }
}

fn run(cfg: &JobConfig) -> Outcome {
    match &cfg.command {
        Command::Dualize { input } => dualize(cfg, input),
        Command::Volume { input, method } => volume(cfg, input, *method),
        Command::Verify { input, other, check } => verify(cfg, input, other.as_deref(), *check),
        Command::Fourier { input, freqs } => fourier_cmd(cfg, input, freqs),
        Command::Render { input, viewport, scale } => render_cmd(cfg, input, viewport.as_deref(), *scale),
    }
}

fn main() -> ExitCode {
    let cfg = JobConfig::parse();
    let (report, code) = match run(&cfg) {
        Ok(r) => {
            let code = if r.status == "ok" { 0 } else { 1 };
            (r, code)
        }
        Err(f) => (
            Report {
                command: command_name(&cfg.command),
                status: "error",
                error: Some(json!({ "kind": f.kind, "message": f.message })),
                ..Report::default()
            },
            2,
        ),
    };
    println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
    ExitCode::from(code)
}
