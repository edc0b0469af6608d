//! Deterministic SVG for planar chains.

use std::collections::BTreeMap;
use std::fmt::Write;

use filliman::io::format_rational;
use filliman::{Error, ExactChain, ExactPoint, ExactScalar, Scalar};
use num_traits::FromPrimitive;

use crate::Failure;

const POSITIVE: &str = "#2b6cb0";
const NEGATIVE: &str = "#c53030";
const GRID: usize = 64;
const LEGEND_ROW: f64 = 18.0;

pub fn parse_viewport(s: &str) -> Result<[f64; 4], Failure> {
    let bad = || Failure { kind: "parse".into(), message: format!("viewport {s:?} is not xmin,ymin,xmax,ymax") };
    let v: Vec<f64> = s.split(',').map(|x| x.trim().parse::<f64>()).collect::<Result<_, _>>().map_err(|_| bad())?;
    match v[..] {
        [a, b, c, d] if a < c && b < d => Ok([a, b, c, d]),
        _ => Err(bad()),
    }
}

fn auto_viewport(c: &ExactChain) -> [f64; 4] {
    let (mut lo, mut hi) = ([0.0f64; 2], [0.0f64; 2]);
    for t in c.terms() {
        for v in t.simplex.vertices() {
            for k in 0..2 {
                let x = v.coords[k].to_f64_lossy();
                lo[k] = lo[k].min(x);
                hi[k] = hi[k].max(x);
            }
        }
    }
    let pad = 0.1 * (hi[0] - lo[0]).max(hi[1] - lo[1]).max(1.0);
    [lo[0] - pad, lo[1] - pad, hi[0] + pad, hi[1] + pad]
}

/// Area of each nonzero net multiplicity, estimated on a fixed grid of
/// cell centres. Points on a simplex boundary are skipped.
fn multiplicity_areas(c: &ExactChain, vp: [f64; 4]) -> Result<BTreeMap<i64, f64>, Failure> {
    let prepared = c.prepare()?;
    let (w, h) = ((vp[2] - vp[0]) / GRID as f64, (vp[3] - vp[1]) / GRID as f64);
    let mut areas = BTreeMap::new();
    for i in 0..GRID {
        for j in 0..GRID {
            let x = vp[0] + (i as f64 + 0.5) * w;
            let y = vp[1] + (j as f64 + 0.5) * h;
            let p = ExactPoint::new(vec![
                ExactScalar::from_f64(x).expect("finite"),
                ExactScalar::from_f64(y).expect("finite"),
            ]);
            match prepared.multiplicity(&p) {
                Ok(0) | Err(Error::NonGenericPoint) => {}
                Ok(m) => *areas.entry(m).or_insert(0.0) += w * h,
                Err(e) => return Err(e.into()),
            }
        }
    }
    Ok(areas)
}

fn fill(sign: i64) -> &'static str {
    if sign > 0 {
        POSITIVE
    } else {
        NEGATIVE
    }
}

/// One polygon per term, an optional dashed outline, the origin and a
/// legend of net multiplicities.
pub fn svg(
    c: &ExactChain,
    sigmas: &[Option<usize>],
    outline: Option<&[ExactPoint]>,
    viewport: Option<[f64; 4]>,
    scale: f64,
) -> Result<String, Failure> {
    let vp = viewport.unwrap_or_else(|| auto_viewport(c));
    let areas = multiplicity_areas(c, vp)?;
    let width = (vp[2] - vp[0]) * scale;
    let plot_h = (vp[3] - vp[1]) * scale;
    let height = plot_h + LEGEND_ROW * (areas.len() as f64 + 2.0);
    let px = |p: &ExactPoint| {
        let x = (p.coords[0].to_f64_lossy() - vp[0]) * scale;
        let y = (vp[3] - p.coords[1].to_f64_lossy()) * scale;
        format!("{x:.2},{y:.2}")
    };

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0}" height="{height:.0}" viewBox="0 0 {width:.2} {height:.2}">"#
    );
    let _ = writeln!(s, r##"<rect width="{width:.2}" height="{height:.2}" fill="#ffffff"/>"##);
    let _ = writeln!(s, r##"<g id="terms" stroke="#1a202c" stroke-width="1" stroke-linejoin="round">"##);
    for (t, sg) in c.terms().iter().zip(sigmas) {
        let pts: Vec<String> = t.simplex.vertices().iter().map(&px).collect();
        let opacity = (0.3 * t.coeff.unsigned_abs() as f64).min(0.9);
        let label = match sg {
            Some(k) => format!("{:+} sigma={k}", t.coeff),
            None => format!("{:+}", t.coeff),
        };
        let _ = writeln!(
            s,
            r#"<polygon points="{}" fill="{}" fill-opacity="{opacity:.2}"><title>{label}</title></polygon>"#,
            pts.join(" "),
            fill(t.coeff)
        );
    }
    let _ = writeln!(s, "</g>");
    if let Some(cycle) = outline {
        let pts: Vec<String> = cycle.iter().map(&px).collect();
        let _ = writeln!(
            s,
            r##"<polygon id="outline" points="{}" fill="none" stroke="#4a5568" stroke-width="2" stroke-dasharray="6 4"/>"##,
            pts.join(" ")
        );
    }
    let oxf = -vp[0] * scale;
    let oyf = vp[3] * scale;
    let _ = writeln!(s, r##"<g id="origin" stroke="#000000" stroke-width="1.5">"##);
    let _ = writeln!(s, r#"<line x1="{:.2}" y1="{oyf:.2}" x2="{:.2}" y2="{oyf:.2}"/>"#, oxf - 6.0, oxf + 6.0);
    let _ = writeln!(s, r#"<line x1="{oxf:.2}" y1="{:.2}" x2="{oxf:.2}" y2="{:.2}"/>"#, oyf - 6.0, oyf + 6.0);
    let _ = writeln!(s, r##"<circle cx="{oxf:.2}" cy="{oyf:.2}" r="2.5" fill="#000000"/>"##);
    let _ = writeln!(s, "</g>");

    let _ = writeln!(s, r##"<g id="legend" font-family="monospace" font-size="12" fill="#1a202c">"##);
    let _ = writeln!(s, r#"<text x="6" y="{:.2}">net multiplicity (grid area)</text>"#, plot_h + LEGEND_ROW - 5.0);
    for (row, (m, area)) in areas.iter().rev().enumerate() {
        let y = plot_h + LEGEND_ROW * (row as f64 + 1.0);
        let opacity = (0.3 * m.unsigned_abs() as f64).min(0.9);
        let _ = writeln!(
            s,
            r#"<rect x="6" y="{:.2}" width="12" height="12" fill="{}" fill-opacity="{opacity:.2}"/><text x="24" y="{:.2}">{m:+}: {area:.3}</text>"#,
            y + 3.0,
            fill(*m),
            y + 13.0
        );
    }
    let _ = writeln!(
        s,
        r#"<text x="6" y="{:.2}">total measure {}</text>"#,
        plot_h + LEGEND_ROW * (areas.len() as f64 + 2.0) - 5.0,
        format_rational(&c.total_measure())
    );
    let _ = writeln!(s, "</g>");
    s.push_str("</svg>\n");
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use filliman::{ExactSimplex, SimplexChain};

    #[test]
    fn viewport_parsing() {
        assert_eq!(parse_viewport("-1, -2, 3, 4").ok(), Some([-1.0, -2.0, 3.0, 4.0]));
        assert!(parse_viewport("1,1,0,2").is_err());
        assert!(parse_viewport("1,2,3").is_err());
    }

    #[test]
    fn legend_counts_overlap() {
        let a = ExactSimplex::from_ints(&[&[0, 0], &[4, 0], &[0, 4]]).unwrap();
        let b = ExactSimplex::from_ints(&[&[1, 1], &[2, 1], &[1, 2]]).unwrap();
        let c = SimplexChain::from_words(2, [(1, a), (1, b)]).unwrap();
        let areas = multiplicity_areas(&c, [-1.0, -1.0, 5.0, 5.0]).unwrap();
        assert_eq!(areas.keys().copied().collect::<Vec<_>>(), vec![1, 2]);
        assert!((areas[&2] - 0.5).abs() < 0.1);
        let svg = svg(&c, &[Some(0), Some(1)], None, None, 10.0).unwrap();
        assert_eq!(svg, super::svg(&c, &[Some(0), Some(1)], None, None, 10.0).unwrap());
        assert!(svg.contains("total measure 17/2"));
    }
}
