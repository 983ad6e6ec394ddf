//! SVG drawing of a list of triangles in the upper half-plane.

use std::fmt::Write as _;

use rayon::prelude::*;

use super::{triangle_of, IdealTriangle, InteriorPoint};
use crate::cosets::CosetList;
use crate::words::Cusp;

#[derive(Clone, Debug, PartialEq)]
pub struct SvgOptions {
    /// Height at which rays to `∞` are cut off.
    pub y_max: f64,
    /// Pixels per unit.
    pub scale: f64,
    /// Margin around the drawing, in pixels.
    pub margin: f64,
    /// Draw each rep's word at `γ(2i)`.
    pub labels: bool,
    /// Fill colours, cycled by triangle index.
    pub palette: Vec<String>,
}

impl Default for SvgOptions {
    fn default() -> Self {
        SvgOptions {
            y_max: 2.2,
            scale: 300.0,
            margin: 20.0,
            labels: false,
            palette: vec!["#d62728".into(), "#1f77b4".into(), "#2ca02c".into()],
        }
    }
}

struct Frame {
    x_min: f64,
    y_max: f64,
    scale: f64,
    margin: f64,
}

impl Frame {
    fn px(&self, (x, y): (f64, f64)) -> (f64, f64) {
        (
            (x - self.x_min) * self.scale + self.margin,
            (self.y_max - y.min(self.y_max)) * self.scale + self.margin,
        )
    }

    fn point(&self, z: (f64, f64)) -> String {
        let (x, y) = self.px(z);
        format!("{} {}", num(x), num(y))
    }
}

fn num(x: f64) -> String {
    let s = format!("{x:.3}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".to_string()
    } else {
        s.to_string()
    }
}

fn interior(p: InteriorPoint) -> (f64, f64) {
    p.to_f64()
}

fn cusp_point(c: Cusp) -> (f64, f64) {
    (c.to_f64().expect("finite cusp"), 0.0)
}

/// The path command continuing from `from` along the geodesic to `to`.
/// Points with `y = f64::INFINITY` stand for `∞`.
fn geodesic(frame: &Frame, from: (f64, f64), to: (f64, f64)) -> String {
    const EPS: f64 = 1e-12;
    if to.1.is_infinite() {
        return format!("L {}", frame.point((from.0, frame.y_max)));
    }
    if from.1.is_infinite() || (from.0 - to.0).abs() < EPS {
        return format!("L {}", frame.point(to));
    }
    // Circle centred on the real axis through both points.
    let (x1, y1) = from;
    let (x2, y2) = to;
    let x0 = ((x1 * x1 + y1 * y1) - (x2 * x2 + y2 * y2)) / (2.0 * (x1 - x2));
    let r = ((x1 - x0).powi(2) + y1 * y1).sqrt();
    let t1 = y1.atan2(x1 - x0);
    let t2 = y2.atan2(x2 - x0);
    // Counter-clockwise in the plane is clockwise on screen (y flipped).
    let sweep = if t2 > t1 { 0 } else { 1 };
    let rp = num(r * frame.scale);
    format!("A {rp} {rp} 0 0 {sweep} {}", frame.point(to))
}

fn triangle_path(frame: &Frame, t: &IdealTriangle) -> String {
    let a = interior(t.rho());
    let b = interior(t.rho2());
    let c = t.cusp();
    let mut d = format!("M {}", frame.point(a));
    let _ = write!(d, " {}", geodesic(frame, a, b));
    if c.is_infinity() {
        let inf = (0.0, f64::INFINITY);
        let _ = write!(d, " {}", geodesic(frame, b, inf));
        let _ = write!(d, " L {}", frame.point((a.0, frame.y_max)));
    } else {
        let z = cusp_point(c);
        let _ = write!(d, " {}", geodesic(frame, b, z));
        let _ = write!(d, " {}", geodesic(frame, z, a));
    }
    d.push_str(" Z");
    d
}

/// One `<path>` per rep in list order, optionally labelled. Unverified lists
/// are drawn with an `UNVERIFIED` watermark.
pub fn render_svg(list: &CosetList, options: &SvgOptions) -> String {
    let triangles: Vec<IdealTriangle> = list
        .reps()
        .par_iter()
        .map(|r| triangle_of(r.word()))
        .collect();

    let mut xs: Vec<f64> = vec![-0.5, 0.5];
    for t in &triangles {
        xs.push(interior(t.rho()).0);
        xs.push(interior(t.rho2()).0);
        if let Some(x) = t.cusp().to_f64() {
            xs.push(x);
        }
    }
    let lo = xs.iter().copied().fold(f64::INFINITY, f64::min) - 0.1;
    let hi = xs.iter().copied().fold(f64::NEG_INFINITY, f64::max) + 0.1;
    let frame = Frame {
        x_min: lo,
        y_max: options.y_max,
        scale: options.scale,
        margin: options.margin,
    };
    let width = (hi - lo) * options.scale + 2.0 * options.margin;
    let height = options.y_max * options.scale + 2.0 * options.margin;

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">",
        w = num(width),
        h = num(height)
    );
    let _ = writeln!(
        out,
        "<title>{} N={}: {} triangles</title>",
        list.group(),
        list.level(),
        triangles.len()
    );
    out.push_str("<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");
    let (ax0, ay) = frame.px((lo, 0.0));
    let (ax1, _) = frame.px((hi, 0.0));
    let _ = writeln!(
        out,
        "<line x1=\"{}\" y1=\"{y}\" x2=\"{}\" y2=\"{y}\" stroke=\"black\" stroke-width=\"1\"/>",
        num(ax0),
        num(ax1),
        y = num(ay)
    );

    out.push_str("<g stroke=\"black\" stroke-width=\"0.5\" fill-opacity=\"0.35\">\n");
    for (i, t) in triangles.iter().enumerate() {
        let fill = if options.palette.is_empty() {
            "none"
        } else {
            options.palette[i % options.palette.len()].as_str()
        };
        let _ = writeln!(
            out,
            "<path d=\"{}\" fill=\"{fill}\" data-word=\"{}\" data-cusp=\"{}\"/>",
            triangle_path(&frame, t),
            t.word(),
            t.cusp()
        );
    }
    out.push_str("</g>\n");

    if options.labels {
        out.push_str("<g font-family=\"monospace\" text-anchor=\"middle\" fill=\"black\">\n");
        for t in &triangles {
            let (x, y) = t.inner_point();
            let size = (0.15 * y.min(options.y_max) * options.scale).clamp(1.0, 0.05 * options.scale);
            let (px, py) = frame.px((x, y));
            let _ = writeln!(
                out,
                "<text x=\"{}\" y=\"{}\" font-size=\"{}\">{}</text>",
                num(px),
                num(py),
                num(size),
                t.word()
            );
        }
        out.push_str("</g>\n");
    }

    if !list.is_verified() {
        let _ = writeln!(
            out,
            "<text x=\"{}\" y=\"{}\" font-size=\"{}\" fill=\"red\" fill-opacity=\"0.5\" text-anchor=\"middle\">UNVERIFIED</text>",
            num(width / 2.0),
            num(options.margin + 0.2 * options.scale),
            num(0.15 * options.scale)
        );
    }
    out.push_str("</svg>\n");
    out
}
