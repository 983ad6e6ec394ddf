use std::fmt;
use std::ops::{Mul, Neg};

use serde::{Deserialize, Serialize};

use super::Cusp;
use crate::residues::{sym_rep, Level, Residue};

/// A 2x2 integer matrix of determinant 1.
///
/// Products use checked arithmetic and panic on overflow rather than wrap.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "[[i64; 2]; 2]", into = "[[i64; 2]; 2]")]
pub struct Mat2 {
    a: i64,
    b: i64,
    c: i64,
    d: i64,
}

impl Mat2 {
    pub const IDENTITY: Mat2 = Mat2 { a: 1, b: 0, c: 0, d: 1 };
    pub const S: Mat2 = Mat2 { a: 0, b: -1, c: 1, d: 0 };

    /// `None` unless `ad - bc = 1`.
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Option<Mat2> {
        let det = (a as i128) * (d as i128) - (b as i128) * (c as i128);
        (det == 1).then_some(Mat2 { a, b, c, d })
    }

    /// `T^e`.
    pub fn t(e: i64) -> Mat2 {
        Mat2 { a: 1, b: e, c: 0, d: 1 }
    }

    pub fn entries(&self) -> [i64; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn rows(&self) -> [[i64; 2]; 2] {
        [[self.a, self.b], [self.c, self.d]]
    }

    pub fn a(&self) -> i64 {
        self.a
    }
    pub fn b(&self) -> i64 {
        self.b
    }
    pub fn c(&self) -> i64 {
        self.c
    }
    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn inverse(&self) -> Mat2 {
        Mat2 {
            a: self.d,
            b: -self.b,
            c: -self.c,
            d: self.a,
        }
    }

    pub fn checked_mul(&self, rhs: &Mat2) -> Option<Mat2> {
        let dot = |x: i64, y: i64, z: i64, w: i64| x.checked_mul(y)?.checked_add(z.checked_mul(w)?);
        Some(Mat2 {
            a: dot(self.a, rhs.a, self.b, rhs.c)?,
            b: dot(self.a, rhs.b, self.b, rhs.d)?,
            c: dot(self.c, rhs.a, self.d, rhs.c)?,
            d: dot(self.c, rhs.b, self.d, rhs.d)?,
        })
    }

    pub fn is_pm_identity(&self) -> bool {
        self.b == 0 && self.c == 0 && self.a == self.d && self.a.abs() == 1
    }
}

impl Mul for Mat2 {
    type Output = Mat2;
    fn mul(self, rhs: Mat2) -> Mat2 {
        self.checked_mul(&rhs)
            .unwrap_or_else(|| panic!("matrix entry overflow in {self} * {rhs}"))
    }
}

impl Neg for Mat2 {
    type Output = Mat2;
    fn neg(self) -> Mat2 {
        Mat2 {
            a: -self.a,
            b: -self.b,
            c: -self.c,
            d: -self.d,
        }
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

impl TryFrom<[[i64; 2]; 2]> for Mat2 {
    type Error = String;
    fn try_from(m: [[i64; 2]; 2]) -> Result<Self, Self::Error> {
        Mat2::new(m[0][0], m[0][1], m[1][0], m[1][1])
            .ok_or_else(|| format!("matrix {m:?} does not have determinant 1"))
    }
}

impl From<Mat2> for [[i64; 2]; 2] {
    fn from(m: Mat2) -> Self {
        m.rows()
    }
}

/// An element of PSL2(Z): the representative of `{m, -m}` whose first
/// nonzero entry among `(c, d, a, b)` is positive.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PslMat(Mat2);

impl PslMat {
    pub fn mat(&self) -> Mat2 {
        self.0
    }
}

impl fmt::Display for PslMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

pub fn psl_normalize(m: Mat2) -> PslMat {
    let lead = [m.c, m.d, m.a, m.b]
        .into_iter()
        .find(|&x| x != 0)
        .expect("determinant-1 matrix is nonzero");
    PslMat(if lead > 0 { m } else { -m })
}

/// The bottom row `(c, d)` reduced mod N.
pub fn row_map(m: &Mat2, level: Level) -> (Residue, Residue) {
    (sym_rep(m.c, level), sym_rep(m.d, level))
}

/// `m(inf) = a/c` in lowest terms.
pub fn mobius_cusp(m: &Mat2) -> Cusp {
    Cusp::new(m.a, m.c)
}

pub fn in_gamma0(m: &Mat2, level: Level) -> bool {
    m.c.rem_euclid(level.n()) == 0
}

/// Membership in `(+-I) Gamma1(N)`.
pub fn in_pm_gamma1(m: &Mat2, level: Level) -> bool {
    let r = |x| sym_rep(x, level);
    let one = level.residue(1);
    in_gamma0(m, level) && r(m.a) == r(m.d) && (r(m.d) == one || r(m.d) == -one)
}

/// Membership in the principal congruence subgroup `Gamma(N)`.
pub fn in_gamma_n(m: &Mat2, level: Level) -> bool {
    let n = level.n();
    m.b.rem_euclid(n) == 0
        && m.c.rem_euclid(n) == 0
        && (m.a - 1).rem_euclid(n) == 0
        && (m.d - 1).rem_euclid(n) == 0
}

/// Membership in `(+-I) Gamma(N)`.
pub fn in_pm_gamma_n(m: &Mat2, level: Level) -> bool {
    in_gamma_n(m, level) || in_gamma_n(&-*m, level)
}
