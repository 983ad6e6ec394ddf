//! The projective line P^1(Z/NZ).
//!
//! P^1(Z/NZ) splits into the affine part (classes `(a:b)` with `a` a unit,
//! always written `(1:b)`) and the points at infinity H (classes with
//! `gcd(a, N) > 1`). On H the function [`big_m`] picks out the least `m >= 0`
//! making `m*a - b` a unit, and the preferred element of a class is the one
//! scaled so that `M*a - b = 1`.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::residues::{gcd, gcd_with_level, inv_mod, sym_rep, Level, Residue};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PointKind {
    Affine,
    Infinity,
}

/// A class `(a:b)` of P^1(Z/NZ), held by its preferred element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ProjPoint {
    a: Residue,
    b: Residue,
    kind: PointKind,
}

impl ProjPoint {
    pub fn level(&self) -> Level {
        self.a.level()
    }

    pub fn a(&self) -> Residue {
        self.a
    }

    pub fn b(&self) -> Residue {
        self.b
    }

    pub fn kind(&self) -> PointKind {
        self.kind
    }

    pub fn pair(&self) -> (i64, i64) {
        (self.a.value(), self.b.value())
    }

    /// `M(a:b)` for points at infinity, `None` on the affine part.
    pub fn m_value(&self) -> Option<u64> {
        match self.kind {
            PointKind::Affine => None,
            PointKind::Infinity => Some(
                big_m(self.a.value(), self.b.value(), self.level())
                    .expect("stored infinity point lies in H"),
            ),
        }
    }

    fn sort_key(&self) -> (PointKind, i64, i64) {
        (self.kind, self.a.value(), self.b.value())
    }
}

impl PartialOrd for ProjPoint {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ProjPoint {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}:{})", self.a, self.b)
    }
}

fn check_on_line(a: Residue, b: Residue) -> Result<()> {
    let n = a.level().n();
    if gcd(gcd(a.value(), b.value()), n) != 1 {
        return Err(Error::NotOnProjLine {
            a: a.value(),
            b: b.value(),
            modulus: n,
        });
    }
    Ok(())
}

/// The preferred element of the class `(a:b)`.
///
/// Affine classes become `(1, a^-1 b)`. A class at infinity is scaled by the
/// inverse of `c = M(a:b)*a - b`, after which `M*a - b = 1`.
pub fn normalize(a: i64, b: i64, level: Level) -> Result<ProjPoint> {
    let (a, b) = (sym_rep(a, level), sym_rep(b, level));
    check_on_line(a, b)?;
    if a.is_unit() {
        let a_inv = inv_mod(a)?;
        return Ok(ProjPoint {
            a: level.residue(1),
            b: a_inv * b,
            kind: PointKind::Affine,
        });
    }
    let m = m_unchecked(a, b)?;
    let c = a * (m as i64) - b;
    let c_inv = inv_mod(c).map_err(|_| {
        Error::InternalInvariant(format!("M(a:b)*a - b = {c} is not a unit mod {level}"))
    })?;
    Ok(ProjPoint {
        a: a * c_inv,
        b: b * c_inv,
        kind: PointKind::Infinity,
    })
}

/// `M(a:b)`: the least `m >= 0` with `gcd(m*a - b, N) = 1`, defined on H.
pub fn big_m(a: i64, b: i64, level: Level) -> Result<u64> {
    let (a, b) = (sym_rep(a, level), sym_rep(b, level));
    check_on_line(a, b)?;
    if a.is_unit() {
        return Err(Error::NotInH {
            a: a.value(),
            b: b.value(),
            modulus: level.n(),
        });
    }
    m_unchecked(a, b)
}

// m*a - b mod N is periodic in m with period dividing N, so a unit value
// must appear for some m < N if it appears at all.
fn m_unchecked(a: Residue, b: Residue) -> Result<u64> {
    let n = a.level().n();
    let mut value = -b;
    for m in 0..n {
        if gcd_with_level(value) == 1 {
            return Ok(m as u64);
        }
        value = value + a;
    }
    Err(Error::InternalInvariant(format!(
        "no m < {n} makes m*{a} - {b} a unit"
    )))
}

/// One preferred point per class of P^1(Z/NZ): affine points by `b`, then
/// points at infinity by `(a, b)`.
pub fn enumerate_p1(level: Level) -> Vec<ProjPoint> {
    let mut seen = HashSet::new();
    for a in level.residues() {
        for b in level.residues() {
            if gcd(gcd(a.value(), b.value()), level.n()) != 1 {
                continue;
            }
            let p = normalize(a.value(), b.value(), level).expect("pair is on the line");
            seen.insert(p);
        }
    }
    let mut points: Vec<ProjPoint> = seen.into_iter().collect();
    points.sort();
    points
}

/// The points at infinity H, in the order of [`enumerate_p1`].
pub fn points_at_infinity(level: Level) -> Vec<ProjPoint> {
    enumerate_p1(level)
        .into_iter()
        .filter(|p| p.kind == PointKind::Infinity)
        .collect()
}

/// `M_j` for every nonunit `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MTable {
    level: Level,
    entries: BTreeMap<i64, u64>,
}

impl MTable {
    pub fn level(&self) -> Level {
        self.level
    }

    pub fn get(&self, j: i64) -> Option<u64> {
        self.entries.get(&sym_rep(j, self.level).value()).copied()
    }

    /// `(j, M_j)` with `j` ascending through the symmetric window.
    pub fn iter(&self) -> impl Iterator<Item = (i64, u64)> + '_ {
        self.entries.iter().map(|(&j, &m)| (j, m))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn max(&self) -> u64 {
        self.entries.values().copied().max().unwrap_or(0)
    }

    /// Number of pairs `(j, m)` with `0 <= m <= M_j`.
    pub fn pair_count(&self) -> u64 {
        self.entries.values().map(|m| m + 1).sum()
    }

    /// The nonunits `j` grouped by their `M_j`.
    pub fn by_value(&self) -> BTreeMap<u64, Vec<i64>> {
        let mut groups: BTreeMap<u64, Vec<i64>> = BTreeMap::new();
        for (j, m) in self.iter() {
            groups.entry(m).or_default().push(j);
        }
        groups
    }
}

pub fn m_table(level: Level) -> MTable {
    let mut entries: BTreeMap<i64, u64> = level.nonunits().map(|j| (j.value(), 0)).collect();
    for p in points_at_infinity(level) {
        let m = p.m_value().expect("point at infinity");
        let slot = entries
            .get_mut(&p.a.value())
            .expect("preferred first coordinate is a nonunit");
        *slot = (*slot).max(m);
    }
    MTable { level, entries }
}

/// Histogram of `M` over all of H.
pub fn m_distribution(level: Level) -> BTreeMap<u64, usize> {
    histogram(points_at_infinity(level).iter())
}

/// Histogram of `M` over the classes of H where `b` is also a nonunit.
pub fn m_distribution_nonunit_b(level: Level) -> BTreeMap<u64, usize> {
    histogram(
        points_at_infinity(level)
            .iter()
            .filter(|p| !p.b.is_unit()),
    )
}

fn histogram<'a>(points: impl Iterator<Item = &'a ProjPoint>) -> BTreeMap<u64, usize> {
    let mut hist = BTreeMap::new();
    for p in points {
        *hist.entry(p.m_value().expect("point at infinity")).or_insert(0) += 1;
    }
    hist
}
