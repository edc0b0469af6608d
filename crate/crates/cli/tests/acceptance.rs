//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails. Set `FILLIMAN_BLESS=1` to rewrite the
//! CLI golden files instead of comparing against them.

use std::f64::consts::PI;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::Instant;

use filliman::chains::sample_in_box;
use filliman::convex::generic_fan;
use filliman::geometry::bounding_box;
use filliman::duality::sigma_histogram;
use filliman::io::format_rational;
use filliman::random::{random_chain, random_point, random_polytope_with_origin, random_relator, random_simplex};
use filliman::transforms::{direct_polytope_volume, generic_functional};
use filliman::*;
use num_traits::FromPrimitive;

type Q = ExactScalar;

// Pinned parameters and tolerances.
const INVOLUTION_CHAINS_PER_DIM: usize = 100;
const INVOLUTION_MAX_TERMS: usize = 6;
const COEFF_BOUND: i64 = 3;
const INVOLUTION_SAMPLES: usize = 200;
const SIMPLEX_TRIALS: usize = 1000;
const POLYTOPES_PER_DIM: usize = 25;
const WELL_DEFINED_SAMPLES: usize = 500;
const POLAR_POINTS: usize = 200;
const RELATORS_PER_DIM: usize = 50;
const RELATOR_SAMPLES: usize = 300;
const QUADRATURE_ABS_TOL: f64 = 1e-9;
const FOURIER_REL_TOL: f64 = 1e-9;
const FOURIER_FREQUENCIES: usize = 25;
const FOURIER_POLYTOPES: usize = 10;
const FIGURE_SAMPLES: usize = 1000;
const CLI_SEED: &str = "7";

/// Coordinates of generated geometry are multiples of 1/64 in [-5, 5].
const GRID_DENOMINATOR: u64 = 64;
const RADIUS: i64 = 5;

type Verdict = Result<String, String>;

fn geom(seed: u64) -> SampleSource {
    SampleSource::with_denominator(seed, GRID_DENOMINATOR)
}

fn q(n: i64, d: i64) -> Q {
    Q::from_ratio(n, d)
}

fn pt(xs: &[(i64, i64)]) -> ExactPoint {
    Point::new(xs.iter().map(|&(n, d)| q(n, d)).collect())
}

fn err(e: Error) -> String {
    format!("unexpected error: {e}")
}

fn polytope(d: usize, seed: u64) -> Result<ExactPolytope, String> {
    random_polytope_with_origin(d, 3 * d + 1, RADIUS, &mut geom(seed)).map_err(err)
}

fn hull(rows: &[&[i64]]) -> ExactPolytope {
    convex_hull(&rows.iter().map(|r| Point::from_ints(r)).collect::<Vec<_>>()).expect("full-dimensional")
}

fn involution() -> Verdict {
    let mut chains = 0;
    for d in 1..=3 {
        for i in 0..INVOLUTION_CHAINS_PER_DIM {
            let seed = 1000 * d as u64 + i as u64;
            let c: ExactChain =
                random_chain(d, INVOLUTION_MAX_TERMS, COEFF_BOUND, RADIUS, &mut SampleSource::new(seed)).map_err(err)?;
            let back = phi(&phi(&c).map_err(err)?).map_err(err)?;
            if back != c {
                return Err(format!("d={d} seed={seed}: phi(phi(c)) differs from c"));
            }
            if !measure_equal(&back, &c, INVOLUTION_SAMPLES, &SampleSource::new(seed)).map_err(err)?.is_equal() {
                return Err(format!("d={d} seed={seed}: measure mismatch"));
            }
            chains += 1;
        }
    }
    let mut src = SampleSource::new(77);
    for k in 0..SIMPLEX_TRIALS {
        let d = 1 + k % 3;
        let s: ExactSimplex = random_simplex(d, RADIUS, &mut src).map_err(err)?;
        let p = polar_simplex(&s).map_err(err)?;
        if polar_simplex(&p).map_err(err)? != s || sigma(&p).map_err(err)? != sigma(&s).map_err(err)? {
            return Err(format!("simplex {k}: polar facts fail"));
        }
    }
    Ok(format!("{chains} chains, {SIMPLEX_TRIALS} simplices"))
}

fn well_defined() -> Verdict {
    let mut checked = 0;
    for d in 2..=3 {
        for i in 0..POLYTOPES_PER_DIM {
            let seed = 2000 + 100 * d as u64 + i as u64;
            let p = polytope(d, seed)?;
            let mut src = SampleSource::new(seed);
            let t1 = triangulate_non_codegenerate(&p, &mut src).map_err(err)?;
            let t2 = generic_fan(&p, &mut src).map_err(err)?;
            if t1.chain == t2.chain {
                return Err(format!("d={d} seed={seed}: triangulations coincide"));
            }
            let (a, b) = (phi(&t1.chain).map_err(err)?, phi(&t2.chain).map_err(err)?);
            if !measure_equal(&a, &b, WELL_DEFINED_SAMPLES, &src).map_err(err)?.is_equal() {
                return Err(format!("d={d} seed={seed}: images differ"));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} polytopes, {WELL_DEFINED_SAMPLES} samples each"))
}

/// Draws `n` points from the box where `keep` holds and `c` is generic,
/// returning their multiplicities.
fn sampled_multiplicities(
    c: &ExactChain,
    lo: &ExactPoint,
    hi: &ExactPoint,
    n: usize,
    src: &mut SampleSource,
    keep: impl Fn(&ExactPoint) -> bool,
) -> Result<Vec<i64>, String> {
    let prepared = c.prepare().map_err(err)?;
    let mut out = Vec::with_capacity(n);
    let mut tries = 0;
    while out.len() < n {
        tries += 1;
        if tries > 100 * n {
            return Err("could not draw enough points".into());
        }
        let p = sample_in_box(lo, hi, src).map_err(err)?;
        if !keep(&p) {
            continue;
        }
        match prepared.multiplicity(&p) {
            Ok(m) => out.push(m),
            Err(Error::NonGenericPoint) => continue,
            Err(e) => return Err(err(e)),
        }
    }
    Ok(out)
}

fn polar_proposition() -> Verdict {
    let mut checked = 0;
    for d in 2..=3 {
        for i in 0..POLYTOPES_PER_DIM {
            let seed = 2000 + 100 * d as u64 + i as u64;
            let p = polytope(d, seed)?;
            let mut src = SampleSource::new(seed);
            let polar = polar_body(&p).map_err(err)?;
            let image = phi_polytope(&p, &mut src).map_err(err)?;
            let (lo, hi) = bounding_box(polar.vertices());
            let inside = sampled_multiplicities(&image, &lo, &hi, POLAR_POINTS, &mut src, |x| polar.contains_strictly(x))?;
            if let Some(m) = inside.iter().find(|&&m| m != 1) {
                return Err(format!("d={d} seed={seed}: interior multiplicity {m}"));
            }
            let pad = hi.sub(&lo);
            let (wide_lo, wide_hi) = (lo.sub(&pad), hi.add(&pad));
            let outside =
                sampled_multiplicities(&image, &wide_lo, &wide_hi, POLAR_POINTS, &mut src, |x| polar.locate(x) > 0)?;
            if let Some(m) = outside.iter().find(|&&m| m != 0) {
                return Err(format!("d={d} seed={seed}: exterior multiplicity {m}"));
            }
            let direct = fan_triangulation(&polar, &polar.vertices()[0]).map_err(err)?.chain;
            if image.moment_signature() != direct.moment_signature() {
                return Err(format!("d={d} seed={seed}: moment signatures differ"));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} polytopes, {POLAR_POINTS} interior and {POLAR_POINTS} exterior points each"))
}

fn offset_square_image() -> Result<ExactChain, String> {
    let p = hull(&[&[1, -1], &[3, -1], &[3, 1], &[1, 1]]);
    phi_polytope(&p, &mut SampleSource::new(0)).map_err(err)
}

fn check_multiplicities(c: &ExactChain, expect: &[(ExactPoint, i64)]) -> Verdict {
    let mut lines = Vec::new();
    for (x, m) in expect {
        match c.multiplicity(x) {
            Ok(got) if got == *m => lines.push(format!("{}={got}", fmt_point(x))),
            Ok(got) => return Err(format!("multiplicity {got} at {}, expected {m}", fmt_point(x))),
            Err(Error::NonGenericPoint) => {
                return Err(format!(
                    "{} lies on a cell boundary, so the density there is not defined (expected {m})",
                    fmt_point(x)
                ))
            }
            Err(e) => return Err(err(e)),
        }
    }
    Ok(lines.join(" "))
}

fn fmt_point(p: &ExactPoint) -> String {
    format!("({})", p.coords.iter().map(format_rational).collect::<Vec<_>>().join(","))
}

fn figure_offset_square() -> Verdict {
    let c = offset_square_image()?;
    check_multiplicities(&c, &[(pt(&[(1, 2), (1, 6)]), -1), (pt(&[(2, 1), (0, 1)]), 0), (pt(&[(-1, 4), (0, 1)]), 0)])
}

fn figure_offset_square_boundary_point() -> Verdict {
    let c = offset_square_image()?;
    check_multiplicities(&c, &[(pt(&[(1, 4), (-1, 4)]), -1)])
}

fn figure_diagonal_square() -> Verdict {
    let p = hull(&[&[1, 1], &[2, 1], &[2, 2], &[1, 2]]);
    let image = phi_polytope(&p, &mut SampleSource::new(0)).map_err(err)?;
    let third = pt(&[(1, 3), (1, 3)]);
    let big = OrientedSimplex::new(vec![pt(&[(1, 1), (0, 1)]), pt(&[(0, 1), (1, 1)]), third.clone()]).map_err(err)?;
    let small = OrientedSimplex::new(vec![pt(&[(1, 2), (0, 1)]), pt(&[(0, 1), (1, 2)]), third]).map_err(err)?;
    let expected = SimplexChain::from_simplex(&big).sub(&SimplexChain::from_simplex(&small)).map_err(err)?;
    if !measure_equal(&image, &expected, FIGURE_SAMPLES, &SampleSource::new(4)).map_err(err)?.is_equal() {
        return Err("image is not [T_big] - [T_small]".into());
    }
    let m = check_multiplicities(&image, &[(pt(&[(1, 2), (1, 3)]), 1), (pt(&[(5, 18), (5, 18)]), -1)])?;
    Ok(format!("[T_big] - [T_small]; {m}"))
}

fn figure_pentagon() -> Verdict {
    let p = hull(&[&[3, 0], &[1, 3], &[-2, 2], &[-2, -2], &[1, -3]]);
    let polar = polar_body(&p).map_err(err)?;
    for v in polar.vertices() {
        let t = fan_triangulation(&polar, v).map_err(err)?;
        if t.cells.iter().any(|s| s.is_codegenerate().unwrap_or(true)) {
            continue;
        }
        let hist = sigma_histogram(&t.chain).map_err(err)?;
        if hist[0] != 1 || hist[1] != t.cells.len() - 1 {
            return Err(format!("sign pattern {hist:?}"));
        }
        let image = phi(&t.chain).map_err(err)?;
        let direct = fan_triangulation(&p, &p.vertices()[0]).map_err(err)?.chain;
        if !measure_equal(&image, &direct, FIGURE_SAMPLES, &SampleSource::new(5)).map_err(err)?.is_equal() {
            return Err("image of the polar fan is not [P]".into());
        }
        return Ok(format!("{} cells, sigma histogram {hist:?}, image = [P]", t.cells.len()));
    }
    Err("no vertex fan of the polar pentagon is free of codegenerate cells".into())
}

fn split_relators() -> Verdict {
    let mut checked = 0;
    for d in 1..=3 {
        for i in 0..RELATORS_PER_DIM {
            let seed = 5000 + 100 * d as u64 + i as u64;
            let r: SplitRelator<Q> = random_relator(d, RADIUS, &mut geom(seed)).map_err(err)?;
            if !r.is_dissection() {
                return Err(format!("d={d} seed={seed}: x_2 not between x_1 and x_3"));
            }
            let c = relator_chain(&r).map_err(err)?;
            let empty = SimplexChain::empty(d);
            let src = SampleSource::new(seed);
            if !measure_equal(&c, &empty, RELATOR_SAMPLES, &src).map_err(err)?.is_equal() {
                return Err(format!("d={d} seed={seed}: relator is not null"));
            }
            if !measure_equal(&phi(&c).map_err(err)?, &empty, RELATOR_SAMPLES, &src).map_err(err)?.is_equal() {
                return Err(format!("d={d} seed={seed}: dual relator is not null"));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} relators, {RELATOR_SAMPLES} samples each"))
}

/// The polar of a random simplicial hull; simple with probability one.
fn simple_polytope(d: usize, seed: u64) -> Result<ExactPolytope, String> {
    for k in 0.. {
        let p = polar_body(&polytope(d, seed + 7919 * k)?).map_err(err)?;
        if p.is_simple() {
            return Ok(p);
        }
    }
    unreachable!()
}

fn volume_agreement() -> Verdict {
    let mut checked = 0;
    for d in 2..=3 {
        for i in 0..POLYTOPES_PER_DIM {
            let seed = 6000 + 100 * d as u64 + i as u64;
            let p = simple_polytope(d, seed)?;
            let mut src = SampleSource::new(seed);
            let direct = format_rational(&direct_polytope_volume(&p).value);
            let dual = format_rational(&filliman_volume(&p, &mut src).map_err(err)?.value);
            let c = generic_functional(&p, &mut src).map_err(err)?;
            let law = format_rational(&lawrence_volume(&p, &c).map_err(err)?.value);
            if direct != dual || direct != law {
                return Err(format!("d={d} seed={seed}: {direct} / {dual} / {law}"));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} simple polytopes, identical strings"))
}

type C = num_complex::Complex64;

fn simpson(f: &impl Fn(f64) -> C, a: f64, b: f64, fa: C, fm: C, fb: C, whole: C, tol: f64, depth: u32) -> C {
    let m = 0.5 * (a + b);
    let (lm, rm) = (0.5 * (a + m), 0.5 * (m + b));
    let (flm, frm) = (f(lm), f(rm));
    let left = (fa + 4.0 * flm + fm) * ((m - a) / 6.0);
    let right = (fm + 4.0 * frm + fb) * ((b - m) / 6.0);
    let delta = left + right - whole;
    if depth == 0 || delta.norm() <= 15.0 * tol {
        return left + right + delta / 15.0;
    }
    simpson(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) + simpson(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1)
}

fn quadrature(f: impl Fn(f64) -> C, a: f64, b: f64, tol: f64) -> C {
    let (fa, fm, fb) = (f(a), f(0.5 * (a + b)), f(b));
    let whole = (fa + 4.0 * fm + fb) * ((b - a) / 6.0);
    simpson(&f, a, b, fa, fm, fb, whole, tol, 40)
}

fn fourier_consistency() -> Verdict {
    let unit = SimplexChain::from_simplex(&OrientedSimplex::<Q>::from_ints(&[&[0], &[1]]).map_err(err)?);
    let mut worst_abs: f64 = 0.0;
    for xi in [1.0, PI, 10.0] {
        let exact_xi = Point::new(vec![Q::from_f64(xi).expect("finite")]);
        let closed = fourier(&unit, &exact_xi).map_err(err)?.value;
        let oracle = quadrature(|x| C::new((xi * x).cos(), -(xi * x).sin()), 0.0, 1.0, 1e-13);
        let e = (closed - oracle).norm();
        worst_abs = worst_abs.max(e);
        if e > QUADRATURE_ABS_TOL {
            return Err(format!("xi={xi}: closed form {closed} vs quadrature {oracle}"));
        }
    }
    let mut worst_rel: f64 = 0.0;
    for i in 0..FOURIER_POLYTOPES {
        let seed = 7000 + i as u64;
        let p = polytope(2, seed)?;
        let mut src = SampleSource::new(seed);
        let primal = fan_triangulation(&p, &p.vertices()[0]).map_err(err)?.chain;
        let polar = polar_body(&p).map_err(err)?;
        let dual = phi(&triangulate_non_codegenerate(&polar, &mut src).map_err(err)?.chain).map_err(err)?;
        let mut fsrc = geom(seed);
        let mut done = 0;
        while done < FOURIER_FREQUENCIES {
            let xi = random_point(2, 3, &mut fsrc).map_err(err)?;
            let (a, b) = match (fourier(&primal, &xi), fourier(&dual, &xi)) {
                (Ok(a), Ok(b)) => (a.value, b.value),
                (Err(Error::NonGenericFrequency { .. }), _) | (_, Err(Error::NonGenericFrequency { .. })) => continue,
                (Err(e), _) | (_, Err(e)) => return Err(err(e)),
            };
            let rel = (a - b).norm() / a.norm().max(b.norm());
            worst_rel = worst_rel.max(rel);
            if rel > FOURIER_REL_TOL {
                return Err(format!("seed={seed} xi={}: {a} vs {b}", fmt_point(&xi)));
            }
            done += 1;
        }
    }
    Ok(format!("quadrature max abs err {worst_abs:.1e}; primal/dual max rel err {worst_rel:.1e}"))
}

struct CliCase {
    name: &'static str,
    args: Vec<String>,
    code: i32,
    /// A file the command writes in its working directory.
    artifact: Option<&'static str>,
}

fn fixture(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name).display().to_string()
}

fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

fn run_cli(args: &[String], dir: &Path) -> Result<(i32, Vec<u8>), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_filliman"))
        .args(["--seed", CLI_SEED])
        .args(args)
        .current_dir(dir)
        .output()
        .map_err(|e| e.to_string())?;
    Ok((out.status.code().unwrap_or(-1), out.stdout))
}

fn cli_cases() -> Vec<CliCase> {
    let case = |name, args: &[&str], code, artifact| CliCase {
        name,
        args: args.iter().map(|a| if a.ends_with(".json") && !a.starts_with("dual") { fixture(a) } else { a.to_string() }).collect(),
        code,
        artifact,
    };
    vec![
        case("dualize_offset_square", &["dualize", "offset_square.json"], 0, None),
        case("dualize_square_out", &["dualize", "--out", "dual_square.json", "square.json"], 0, Some("dual_square.json")),
        case("dualize_codegenerate", &["dualize", "codegenerate_square.json"], 2, None),
        case("dualize_malformed", &["dualize", "malformed.json"], 2, None),
        case("volume_square_direct", &["volume", "--method", "direct", "square.json"], 0, None),
        case("volume_square_filliman", &["volume", "--method", "filliman", "square.json"], 0, None),
        case("volume_square_lawrence", &["volume", "--method", "lawrence", "square.json"], 0, None),
        case("volume_pentagon_filliman", &["volume", "--method", "filliman", "pentagon.json"], 0, None),
        case("volume_offset_filliman", &["volume", "--method", "filliman", "offset_square.json"], 2, None),
        case("volume_octahedron_lawrence", &["volume", "--method", "lawrence", "octahedron.json"], 2, None),
        case("verify_involution", &["verify", "--check", "involution", "chain.json"], 0, None),
        case("verify_polar", &["verify", "--check", "polar", "pentagon.json"], 0, None),
        case("verify_split", &["verify", "--check", "split", "chain.json"], 0, None),
        case("verify_equal_refined", &["verify", "--check", "equal", "chain.json", "chain_refined.json"], 0, None),
        case("verify_equal_bumped", &["verify", "--check", "equal", "chain.json", "chain_bumped.json"], 1, None),
        case("verify_polar_offset", &["verify", "--check", "polar", "offset_square.json"], 2, None),
        case("fourier_chain", &["fourier", "--freq", "1,1/3", "--freq=-2,5/2", "chain.json"], 0, None),
        case("fourier_segment_default", &["fourier", "segment.json"], 0, None),
        case("render_pentagon", &["render", "--out", "pentagon.svg", "pentagon.json"], 0, Some("pentagon.svg")),
        case("render_offset_square", &["render", "--out", "offset.svg", "offset_square.json"], 0, Some("offset.svg")),
        case(
            "render_fixed_viewport",
            &["render", "--viewport=-2,-2,5,3", "--scale", "50", "--out", "chain.svg", "chain.json"],
            0,
            Some("chain.svg"),
        ),
        case("render_segment", &["render", "--out", "segment.svg", "segment.json"], 2, None),
    ]
}

/// Renders the dual of the offset square from a `dualize --out` file.
fn dual_render_case(dir: &Path) -> Result<(i32, Vec<u8>, Vec<u8>), String> {
    let (code, _) = run_cli(&["dualize".into(), "--out".into(), "dual.json".into(), fixture("offset_square.json")], dir)?;
    if code != 0 {
        return Err(format!("dualize exited {code}"));
    }
    let (code, stdout) = run_cli(&["render".into(), "--out".into(), "dual.svg".into(), "dual.json".into()], dir)?;
    let svg = fs::read(dir.join("dual.svg")).map_err(|e| e.to_string())?;
    Ok((code, stdout, svg))
}

fn compare_golden(name: &str, bytes: &[u8], bless: bool) -> Result<(), String> {
    let path = golden_dir().join(name);
    if bless {
        fs::create_dir_all(golden_dir()).map_err(|e| e.to_string())?;
        fs::write(&path, bytes).map_err(|e| e.to_string())?;
        return Ok(());
    }
    let want = fs::read(&path).map_err(|e| format!("{}: {e}", path.display()))?;
    if want != bytes {
        return Err(format!("{name} differs from golden file"));
    }
    Ok(())
}

fn cli_contract() -> Verdict {
    let bless = std::env::var_os("FILLIMAN_BLESS").is_some();
    let mut codes = [0usize; 3];
    let cases = cli_cases();
    for c in &cases {
        let mut runs = Vec::new();
        for _ in 0..2 {
            let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
            let (code, stdout) = run_cli(&c.args, dir.path())?;
            let artifact = match c.artifact {
                Some(f) => Some(fs::read(dir.path().join(f)).map_err(|e| format!("{}: {e}", c.name))?),
                None => None,
            };
            runs.push((code, stdout, artifact));
        }
        if runs[0] != runs[1] {
            return Err(format!("{}: output not byte-stable", c.name));
        }
        let (code, stdout, artifact) = &runs[0];
        if *code != c.code {
            return Err(format!("{}: exit {code}, expected {}", c.name, c.code));
        }
        codes[*code as usize] += 1;
        compare_golden(&format!("{}.stdout.json", c.name), stdout, bless)?;
        if let (Some(bytes), Some(f)) = (artifact, c.artifact) {
            compare_golden(&format!("{}.{}", c.name, f.rsplit('.').next().unwrap_or("out")), bytes, bless)?;
        }
    }
    let a = tempfile::tempdir().map_err(|e| e.to_string())?;
    let b = tempfile::tempdir().map_err(|e| e.to_string())?;
    let first = dual_render_case(a.path())?;
    if first != dual_render_case(b.path())? {
        return Err("dual render not byte-stable".into());
    }
    compare_golden("render_offset_dual.svg", &first.2, bless)?;
    codes[0] += 1;
    if codes.iter().any(|&n| n == 0) {
        return Err(format!("exit-code matrix incomplete: {codes:?}"));
    }
    let verb = if bless { "blessed" } else { "matched" };
    Ok(format!("{} invocations {verb}, exit codes 0/1/2 = {}/{}/{}", cases.len() + 1, codes[0], codes[1], codes[2]))
}

fn main() {
    let criteria: [(&str, &str, fn() -> Verdict); 11] = [
        ("1", "involution", involution),
        ("2", "well-definedness", well_defined),
        ("3", "polar body", polar_proposition),
        ("4a", "offset square", figure_offset_square),
        ("4a'", "offset square at (1/4,-1/4)", figure_offset_square_boundary_point),
        ("4b", "diagonal square", figure_diagonal_square),
        ("4c", "pentagon", figure_pentagon),
        ("5", "split relators", split_relators),
        ("6", "volume agreement", volume_agreement),
        ("7", "fourier consistency", fourier_consistency),
        ("8", "cli contract", cli_contract),
    ];
    let mut failed = 0;
    for (id, name, f) in criteria {
        let start = Instant::now();
        let verdict = f();
        let secs = start.elapsed().as_secs_f64();
        match verdict {
            Ok(detail) => println!("PASS {id:<4} {name}: {detail} [{secs:.1}s]"),
            Err(detail) => {
                failed += 1;
                println!("FAIL {id:<4} {name}: {detail} [{secs:.1}s]");
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
