use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::Path;

use num_complex::Complex64;

use super::measure::angle;
use super::RootSet;
use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FigureFormat {
    Csv,
    Svg,
}

impl std::str::FromStr for FigureFormat {
    type Err = crate::error::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(FigureFormat::Csv),
            "svg" => Ok(FigureFormat::Svg),
            other => Err(crate::error::Error::UnsupportedFamily(other.to_string())),
        }
    }
}

/// 17 significant digits.
fn num(x: f64) -> String {
    format!("{x:.16e}")
}

/// CSV with columns `re,im,modulus,angle`, angle in `[0, 2 pi)`.
pub fn write_roots_csv<W: Write>(out: W, roots: &[Complex64]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["re", "im", "modulus", "angle"])?;
    for z in roots {
        w.write_record([num(z.re), num(z.im), num(z.norm()), num(angle(*z))])?;
    }
    w.flush()?;
    Ok(())
}

/// Scatter plot on a square canvas spanning `+-max(1.1, max |z|)`, with the
/// unit circle and axes drawn.
pub fn roots_svg(roots: &[Complex64], title: &str) -> String {
    let extent = roots.iter().map(|z| z.norm()).fold(1.1f64, f64::max);
    let size = 2.0 * extent;
    let stroke = size / 400.0;
    let dot = size / 180.0;
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}" width="600" height="600">"#,
        num(-extent),
        num(-extent),
        num(size),
        num(size)
    );
    let _ = writeln!(s, "<title>{}</title>", escape(title));
    let _ = writeln!(
        s,
        r#"<rect x="{}" y="{}" width="{}" height="{}" fill="white"/>"#,
        num(-extent),
        num(-extent),
        num(size),
        num(size)
    );
    let _ = writeln!(
        s,
        r##"<line x1="{0}" y1="0" x2="{1}" y2="0" stroke="#999999" stroke-width="{2}"/>"##,
        num(-extent),
        num(extent),
        num(stroke)
    );
    let _ = writeln!(
        s,
        r##"<line x1="0" y1="{0}" x2="0" y2="{1}" stroke="#999999" stroke-width="{2}"/>"##,
        num(-extent),
        num(extent),
        num(stroke)
    );
    let _ = writeln!(
        s,
        r##"<circle cx="0" cy="0" r="1" fill="none" stroke="#3060c0" stroke-width="{}"/>"##,
        num(stroke)
    );
    // SVG y grows downwards.
    for z in roots {
        let _ = writeln!(
            s,
            r##"<circle cx="{}" cy="{}" r="{}" fill="#c03030"/>"##,
            num(z.re),
            num(-z.im),
            num(dot)
        );
    }
    s.push_str("</svg>\n");
    s
}

fn escape(t: &str) -> String {
    t.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Writes the roots to `path` in the given format.
pub fn figure_export(r: &RootSet, fmt: FigureFormat, path: &Path, title: &str) -> Result<()> {
    match fmt {
        FigureFormat::Csv => write_roots_csv(fs::File::create(path)?, &r.roots),
        FigureFormat::Svg => {
            fs::write(path, roots_svg(&r.roots, title))?;
            Ok(())
        }
    }
}
