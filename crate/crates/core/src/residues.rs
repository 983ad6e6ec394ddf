//! Arithmetic in Z/NZ using the symmetric residue convention.
//!
//! Every residue is stored as the unique integer in `[-N1, N2]` congruent to
//! it, where `N1 = floor((N-1)/2)` and `N2 = floor(N/2)`. Equality of
//! [`Residue`] values is therefore equality of classes.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// The modulus N (at least 2) together with its symmetric window bounds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Level {
    n: i64,
}

impl Level {
    pub fn new(n: i64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidLevel(n));
        }
        Ok(Level { n })
    }

    #[inline]
    pub fn n(self) -> i64 {
        self.n
    }

    /// `floor((N-1)/2)`, so the window starts at `-n1()`.
    #[inline]
    pub fn n1(self) -> i64 {
        (self.n - 1) / 2
    }

    /// `floor(N/2)`, the top of the window.
    #[inline]
    pub fn n2(self) -> i64 {
        self.n / 2
    }

    /// All residues in window order `-N1, ..., N2`.
    pub fn residues(self) -> impl Iterator<Item = Residue> {
        (-self.n1()..=self.n2()).map(move |value| Residue { level: self, value })
    }

    /// Residues `x` with `gcd(x, N) > 1`, in window order.
    pub fn nonunits(self) -> impl Iterator<Item = Residue> {
        self.residues().filter(|r| !r.is_unit())
    }

    pub fn residue(self, x: i64) -> Residue {
        sym_rep(x, self)
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.n)
    }
}

/// An element of Z/NZ held by its symmetric representative.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Residue {
    level: Level,
    value: i64,
}

impl Residue {
    #[inline]
    pub fn value(self) -> i64 {
        self.value
    }

    #[inline]
    pub fn level(self) -> Level {
        self.level
    }

    pub fn is_unit(self) -> bool {
        gcd_with_level(self) == 1
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn inverse(self) -> Result<Residue> {
        inv_mod(self)
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// The symmetric representative of `x` modulo N.
pub fn sym_rep(x: i64, level: Level) -> Residue {
    let n = level.n();
    let mut r = x.rem_euclid(n);
    if r > level.n2() {
        r -= n;
    }
    Residue { level, value: r }
}

/// `gcd(a, N)`, a value in `[1, N]`.
pub fn gcd_with_level(a: Residue) -> i64 {
    gcd(a.value, a.level.n())
}

/// The symmetric representative of the inverse of a unit.
pub fn inv_mod(a: Residue) -> Result<Residue> {
    let n = a.level.n();
    let (g, x, _) = ext_gcd(a.value, n);
    if g != 1 {
        return Err(Error::NotAUnit {
            value: a.value,
            modulus: n,
        });
    }
    Ok(sym_rep(x, a.level))
}

/// Non-negative gcd; `gcd(0, 0) = 0`.
pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a as i64
}

/// Returns `(g, x, y)` with `a*x + b*y = g = gcd(a, b) >= 0`.
pub(crate) fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut old_r, mut r) = (a as i128, b as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    let (mut old_t, mut t) = (0i128, 1i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    if old_r < 0 {
        (old_r, old_s, old_t) = (-old_r, -old_s, -old_t);
    }
    (old_r as i64, old_s as i64, old_t as i64)
}

fn same_level(a: Residue, b: Residue) -> Level {
    assert_eq!(
        a.level, b.level,
        "mixed-level residue arithmetic: {} vs {}",
        a.level, b.level
    );
    a.level
}

impl Add for Residue {
    type Output = Residue;
    fn add(self, rhs: Residue) -> Residue {
        let level = same_level(self, rhs);
        sym_rep(self.value + rhs.value, level)
    }
}

impl Sub for Residue {
    type Output = Residue;
    fn sub(self, rhs: Residue) -> Residue {
        let level = same_level(self, rhs);
        sym_rep(self.value - rhs.value, level)
    }
}

impl Mul for Residue {
    type Output = Residue;
    fn mul(self, rhs: Residue) -> Residue {
        let level = same_level(self, rhs);
        let prod = (self.value as i128 * rhs.value as i128).rem_euclid(level.n() as i128);
        sym_rep(prod as i64, level)
    }
}

impl Mul<i64> for Residue {
    type Output = Residue;
    fn mul(self, rhs: i64) -> Residue {
        self * sym_rep(rhs, self.level)
    }
}

impl Neg for Residue {
    type Output = Residue;
    fn neg(self) -> Residue {
        sym_rep(-self.value, self.level)
    }
}
