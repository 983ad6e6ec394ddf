//! Geometry of the domains: each representative `γ` contributes the ideal
//! triangle `γD`, where `D = {|z| > 1, |Re z| < 1/2}` has vertices `ρ`,
//! `ρ²` and `∞` (`ρ = e^{iπ/3}`).
//!
//! The finite vertices are kept exactly as `x + y√3·i` with rational `x`,
//! `y`; floating point only appears when drawing.

mod cusps;
mod json;
mod svg;

use std::hash::{Hash, Hasher};

use num_rational::Ratio;
use serde::Serialize;

use crate::words::{mobius_cusp, Cusp, GroupWord, Mat2};

pub use cusps::{
    cusp_class_representative, cusp_equivalent, cusp_table, cusp_width, cusps_of, CuspClass,
    CuspClassTable, CuspRow,
};
pub use json::render_json;
pub use svg::{render_svg, SvgOptions};

/// Which vertex of `D` an interior vertex is the image of.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Base {
    Rho,
    Rho2,
}

/// `matrix · base`, with its exact position `re + im_sqrt3·√3·i`.
#[derive(Clone, Copy, Debug)]
pub struct InteriorPoint {
    matrix: Mat2,
    base: Base,
    re: Ratio<i64>,
    im_sqrt3: Ratio<i64>,
}

impl InteriorPoint {
    pub fn new(matrix: Mat2, base: Base) -> InteriorPoint {
        // rho^2 = rho - 1, so g(rho^2) = (g T^-1)(rho).
        let g = match base {
            Base::Rho => matrix,
            Base::Rho2 => matrix * Mat2::t(-1),
        };
        let (a, b, c, d) = (g.a(), g.b(), g.c(), g.d());
        // (a rho + b)/(c rho + d) = (a rho + b)(c conj(rho) + d) / |c rho + d|^2
        // with rho + conj(rho) = 1, |rho| = 1 and ad - bc = 1.
        let norm = c * c + c * d + d * d;
        InteriorPoint {
            matrix,
            base,
            re: Ratio::new(2 * a * c + 2 * b * d + a * d + b * c, 2 * norm),
            im_sqrt3: Ratio::new(1, 2 * norm),
        }
    }

    pub fn matrix(&self) -> Mat2 {
        self.matrix
    }

    pub fn base(&self) -> Base {
        self.base
    }

    pub fn re(&self) -> Ratio<i64> {
        self.re
    }

    /// Imaginary part divided by `√3`.
    pub fn im_over_sqrt3(&self) -> Ratio<i64> {
        self.im_sqrt3
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (ratio_f64(self.re), ratio_f64(self.im_sqrt3) * 3f64.sqrt())
    }
}

// Points are equal when they are the same point of H, whatever matrix
// produced them.
impl PartialEq for InteriorPoint {
    fn eq(&self, other: &Self) -> bool {
        self.re == other.re && self.im_sqrt3 == other.im_sqrt3
    }
}

impl Eq for InteriorPoint {}

impl Hash for InteriorPoint {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.re.hash(state);
        self.im_sqrt3.hash(state);
    }
}

fn ratio_f64(r: Ratio<i64>) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Vertex {
    Interior(InteriorPoint),
    Cusp(Cusp),
}

/// The triangle `γD` for a representative `γ`.
#[derive(Clone, Debug)]
pub struct IdealTriangle {
    word: GroupWord,
    matrix: Mat2,
    vertices: [Vertex; 3],
}

pub fn triangle_of(word: &GroupWord) -> IdealTriangle {
    let matrix = word.evaluate();
    IdealTriangle {
        word: word.clone(),
        matrix,
        vertices: [
            Vertex::Interior(InteriorPoint::new(matrix, Base::Rho)),
            Vertex::Interior(InteriorPoint::new(matrix, Base::Rho2)),
            Vertex::Cusp(mobius_cusp(&matrix)),
        ],
    }
}

impl IdealTriangle {
    pub fn word(&self) -> &GroupWord {
        &self.word
    }

    pub fn matrix(&self) -> Mat2 {
        self.matrix
    }

    /// `[γρ, γρ², γ∞]`.
    pub fn vertices(&self) -> &[Vertex; 3] {
        &self.vertices
    }

    pub fn rho(&self) -> InteriorPoint {
        match self.vertices[0] {
            Vertex::Interior(p) => p,
            Vertex::Cusp(_) => unreachable!(),
        }
    }

    pub fn rho2(&self) -> InteriorPoint {
        match self.vertices[1] {
            Vertex::Interior(p) => p,
            Vertex::Cusp(_) => unreachable!(),
        }
    }

    pub fn cusp(&self) -> Cusp {
        match self.vertices[2] {
            Vertex::Cusp(c) => c,
            Vertex::Interior(_) => unreachable!(),
        }
    }

    pub fn shared_vertices(&self, other: &IdealTriangle) -> usize {
        self.vertices
            .iter()
            .filter(|v| other.vertices.contains(v))
            .count()
    }

    /// `γ(2i)`, a point inside the triangle.
    pub fn inner_point(&self) -> (f64, f64) {
        act(&self.matrix, (0.0, 2.0))
    }
}

/// Möbius action of `m` on `x + iy`.
pub fn act(m: &Mat2, (x, y): (f64, f64)) -> (f64, f64) {
    let (a, b, c, d) = (m.a() as f64, m.b() as f64, m.c() as f64, m.d() as f64);
    // (a z + b) / (c z + d), multiplied through by conj(c z + d)
    let (nr, ni) = (a * x + b, a * y);
    let (dr, di) = (c * x + d, c * y);
    let den = dr * dr + di * di;
    ((nr * dr + ni * di) / den, (ni * dr - nr * di) / den)
}

/// Whether `z` lies in the open domain `D`, at least `margin` inside.
pub fn in_standard_domain((x, y): (f64, f64), margin: f64) -> bool {
    y > 0.0 && x.abs() < 0.5 - margin && (x * x + y * y).sqrt() > 1.0 + margin
}
