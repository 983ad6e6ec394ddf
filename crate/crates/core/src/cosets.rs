//! The representative lists Θ₀(N), Θ₁(N), Θ(N) and their runtime check.
//!
//! Θ₀(N) realises the preferred elements of P¹(Z/NZ) as the words `ST^i`
//! (affine part) and `ST^j S T^m`, `0 <= m <= M_j` (points at infinity).
//! Θ₁(N) multiplies Θ₀(N) on the left by representatives of
//! `(±I)Γ₁(N) \ Γ₀(N)`, and Θ(N) multiplies Θ₁(N) on the left by `T^ℓ`.
//!
//! Lists are built in a fixed order so that every export is reproducible.
//! Representatives are taken modulo `±I`: for Γ₁(N) and Γ(N) the check is
//! against `(±I)Γ₁(N)` and `(±I)Γ(N)`.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::projline::{enumerate_p1, m_table, normalize, ProjPoint};
use crate::residues::{gcd, inv_mod, sym_rep, Level};
use crate::words::{
    evaluate, in_gamma0, in_pm_gamma1, in_pm_gamma_n, mobius_cusp, row_map, Cusp, GroupWord, Mat2,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Subgroup {
    #[serde(rename = "gamma0")]
    Gamma0,
    #[serde(rename = "gamma1")]
    Gamma1,
    #[serde(rename = "gammaN")]
    GammaFull,
}

impl Subgroup {
    pub const ALL: [Subgroup; 3] = [Subgroup::Gamma0, Subgroup::Gamma1, Subgroup::GammaFull];

    pub fn name(self) -> &'static str {
        match self {
            Subgroup::Gamma0 => "gamma0",
            Subgroup::Gamma1 => "gamma1",
            Subgroup::GammaFull => "gammaN",
        }
    }

    /// Whether `m` lies in the subgroup (times `±I` for Γ₁ and Γ).
    pub fn contains(self, m: &Mat2, level: Level) -> bool {
        match self {
            Subgroup::Gamma0 => in_gamma0(m, level),
            Subgroup::Gamma1 => in_pm_gamma1(m, level),
            Subgroup::GammaFull => in_pm_gamma_n(m, level),
        }
    }

    pub fn build(self, level: Level) -> CosetList {
        match self {
            Subgroup::Gamma0 => theta0(level),
            Subgroup::Gamma1 => theta1(level),
            Subgroup::GammaFull => theta_full(level),
        }
    }
}

impl fmt::Display for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Subgroup {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "gamma0" => Ok(Subgroup::Gamma0),
            "gamma1" => Ok(Subgroup::Gamma1),
            "gammaN" | "gamma" => Ok(Subgroup::GammaFull),
            _ => Err(format!("unknown group {s:?} (expected gamma0, gamma1 or gammaN)")),
        }
    }
}

/// A representative with its matrix cached.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rep {
    word: GroupWord,
    matrix: Mat2,
}

impl Rep {
    pub fn new(word: GroupWord) -> Rep {
        let matrix = evaluate(&word);
        Rep { word, matrix }
    }

    pub fn word(&self) -> &GroupWord {
        &self.word
    }

    pub fn matrix(&self) -> &Mat2 {
        &self.matrix
    }

    pub fn cusp(&self) -> Cusp {
        mobius_cusp(&self.matrix)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetList {
    level: Level,
    group: Subgroup,
    reps: Vec<Rep>,
    verified: bool,
}

impl CosetList {
    /// An unverified list of arbitrary words.
    pub fn from_words(level: Level, group: Subgroup, words: impl IntoIterator<Item = GroupWord>) -> Self {
        CosetList {
            level,
            group,
            reps: words.into_iter().map(Rep::new).collect(),
            verified: false,
        }
    }

    pub fn level(&self) -> Level {
        self.level
    }

    pub fn group(&self) -> Subgroup {
        self.group
    }

    pub fn reps(&self) -> &[Rep] {
        &self.reps
    }

    pub fn words(&self) -> impl Iterator<Item = &GroupWord> {
        self.reps.iter().map(|r| &r.word)
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn is_verified(&self) -> bool {
        self.verified
    }

    /// Runs [`verify`] and marks the list verified on success.
    pub fn verified(mut self) -> Result<CosetList> {
        verify(&self)?;
        self.verified = true;
        Ok(self)
    }

    pub fn to_json(&self) -> Result<String> {
        let doc = CosetListJson {
            n: self.level.n(),
            group: self.group,
            reps: self
                .reps
                .iter()
                .map(|r| RepJson {
                    word: r.word.clone(),
                    matrix: r.matrix,
                    cusp: r.cusp().to_string(),
                })
                .collect(),
            verified: self.verified,
        };
        Ok(serde_json::to_string_pretty(&doc)?)
    }

    /// Reads the JSON export. The stored `verified` flag is not trusted: the
    /// returned list is unverified. Matrices and cusps must agree with words.
    pub fn from_json(text: &str) -> Result<CosetList> {
        let doc: CosetListJson = serde_json::from_str(text)?;
        let level = Level::new(doc.n)?;
        let mut reps = Vec::with_capacity(doc.reps.len());
        for (i, r) in doc.reps.into_iter().enumerate() {
            let rep = Rep::new(r.word);
            if rep.matrix != r.matrix {
                return Err(Error::InvalidList(format!(
                    "rep {i} ({}): matrix {} does not match the word ({})",
                    rep.word, r.matrix, rep.matrix
                )));
            }
            let cusp: Cusp = r
                .cusp
                .parse()
                .map_err(|e| Error::InvalidList(format!("rep {i}: {e}")))?;
            if cusp != rep.cusp() {
                return Err(Error::InvalidList(format!(
                    "rep {i} ({}): cusp {cusp} should be {}",
                    rep.word,
                    rep.cusp()
                )));
            }
            reps.push(rep);
        }
        Ok(CosetList {
            level,
            group: doc.group,
            reps,
            verified: false,
        })
    }
}

#[derive(Serialize, Deserialize)]
struct CosetListJson {
    #[serde(rename = "N")]
    n: i64,
    group: Subgroup,
    reps: Vec<RepJson>,
    verified: bool,
}

#[derive(Serialize, Deserialize)]
struct RepJson {
    word: GroupWord,
    matrix: Mat2,
    cusp: String,
}

fn st(i: i64) -> GroupWord {
    GroupWord::s().then_t(i)
}

fn stst(j: i64, m: i64) -> GroupWord {
    st(j).then_s().then_t(m)
}

/// Θ₀(N): `ST^i` for `i` in the window, then `ST^j S T^m` by `(j, m)`.
pub fn theta0(level: Level) -> CosetList {
    CosetList::from_words(level, Subgroup::Gamma0, theta0_words(level))
}

fn theta0_words(level: Level) -> Vec<GroupWord> {
    let mt = m_table(level);
    let mut words: Vec<GroupWord> = level.residues().map(|i| st(i.value())).collect();
    for (j, mj) in mt.iter() {
        words.extend((0..=mj as i64).map(|m| stst(j, m)));
    }
    words
}

/// `(k, k^-1)` for units `k` with `-N1 <= k <= -2`.
fn quotient_units(level: Level) -> Vec<(i64, i64)> {
    (-level.n1()..=-2)
        .filter(|&k| gcd(k, level.n()) == 1)
        .map(|k| {
            let kinv = inv_mod(sym_rep(k, level)).expect("k is a unit");
            (k, kinv.value())
        })
        .collect()
}

/// Representatives of `(±I)Γ₁(N) \ Γ₀(N)`: `I` and `ST^k S T^{k^-1} S`.
pub fn gamma1_quotient_reps(level: Level) -> Vec<GroupWord> {
    std::iter::once(GroupWord::identity())
        .chain(
            quotient_units(level)
                .into_iter()
                .map(|(k, kinv)| st(k).then_s().then_t(kinv).then_s()),
        )
        .collect()
}

/// Θ₁(N): Θ₀(N), then `ST^k S T^i`, then `ST^k S T^{(k^-1 + j)~} S T^m`,
/// each family ordered by `k` first.
pub fn theta1(level: Level) -> CosetList {
    CosetList::from_words(level, Subgroup::Gamma1, theta1_words(level))
}

fn theta1_words(level: Level) -> Vec<GroupWord> {
    let mt = m_table(level);
    let ks = quotient_units(level);
    let mut words = theta0_words(level);
    for &(k, _) in &ks {
        words.extend(level.residues().map(|i| st(k).then_s().then_t(i.value())));
    }
    for &(k, kinv) in &ks {
        for (j, mj) in mt.iter() {
            let shifted = sym_rep(kinv + j, level).value();
            words.extend((0..=mj as i64).map(|m| st(k).then_s().then_t(shifted).then_s().then_t(m)));
        }
    }
    words
}

/// Θ(N): `T^ℓ γ` for `ℓ` in the window (outer) and `γ` in Θ₁(N) (inner).
pub fn theta_full(level: Level) -> CosetList {
    let inner = theta1_words(level);
    let words = level
        .residues()
        .flat_map(|l| inner.iter().map(move |g| GroupWord::t(l.value()).then(g)))
        .collect::<Vec<_>>();
    CosetList::from_words(level, Subgroup::GammaFull, words)
}

/// A complete invariant of the right coset `Hγ` for each subgroup `H`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum CosetKey {
    /// Γ₀: the P¹ class of the bottom row.
    Line(ProjPoint),
    /// (±I)Γ₁: the bottom row mod N up to sign.
    Row([i64; 2]),
    /// (±I)Γ: the whole matrix mod N up to sign.
    Matrix([i64; 4]),
}

impl fmt::Display for CosetKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CosetKey::Line(p) => write!(f, "P1 class {p}"),
            CosetKey::Row([c, d]) => write!(f, "bottom row ±({c}, {d})"),
            CosetKey::Matrix([a, b, c, d]) => write!(f, "matrix ±[[{a}, {b}], [{c}, {d}]]"),
        }
    }
}

fn reduce<const K: usize>(entries: [i64; K], n: i64) -> [i64; K] {
    let pos = entries.map(|x| x.rem_euclid(n));
    let neg = entries.map(|x| (-x).rem_euclid(n));
    pos.min(neg)
}

fn coset_key(group: Subgroup, m: &Mat2, level: Level) -> CosetKey {
    let n = level.n();
    match group {
        Subgroup::Gamma0 => {
            let (c, d) = row_map(m, level);
            CosetKey::Line(normalize(c.value(), d.value(), level).expect("bottom row is primitive"))
        }
        Subgroup::Gamma1 => CosetKey::Row(reduce([m.c(), m.d()], n)),
        Subgroup::GammaFull => CosetKey::Matrix(reduce(m.entries(), n)),
    }
}

/// Every coset of the subgroup in Γ(1), found by direct enumeration mod N.
fn all_coset_keys(group: Subgroup, level: Level) -> BTreeSet<CosetKey> {
    let n = level.n();
    let mut keys = BTreeSet::new();
    match group {
        Subgroup::Gamma0 => keys.extend(enumerate_p1(level).into_iter().map(CosetKey::Line)),
        Subgroup::Gamma1 => {
            for c in 0..n {
                for d in 0..n {
                    if gcd(gcd(c, d), n) == 1 {
                        keys.insert(CosetKey::Row(reduce([c, d], n)));
                    }
                }
            }
        }
        Subgroup::GammaFull => {
            for_each_sl2_mod(n, |e| {
                keys.insert(CosetKey::Matrix(reduce(e, n)));
            });
        }
    }
    keys
}

fn for_each_sl2_mod(n: i64, mut f: impl FnMut([i64; 4])) {
    for c in 0..n {
        for d in 0..n {
            if gcd(gcd(c, d), n) != 1 {
                continue;
            }
            for a in 0..n {
                for b in 0..n {
                    if (a * d - b * c - 1).rem_euclid(n) == 0 {
                        f([a, b, c, d]);
                    }
                }
            }
        }
    }
}

/// Number of cosets of the subgroup, counted by enumeration mod N.
fn coset_count(group: Subgroup, level: Level) -> usize {
    match group {
        Subgroup::GammaFull => {
            // Orbits of {M, -M}: (all + fixed) / 2.
            let n = level.n();
            let (mut all, mut fixed) = (0usize, 0usize);
            for_each_sl2_mod(n, |e| {
                all += 1;
                if e.map(|x| (-x).rem_euclid(n)) == e {
                    fixed += 1;
                }
            });
            (all + fixed) / 2
        }
        _ => all_coset_keys(group, level).len(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Collision {
    pub first: usize,
    pub second: usize,
    pub first_word: String,
    pub second_word: String,
    pub coset: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    #[serde(rename = "N")]
    pub level: i64,
    pub group: Subgroup,
    pub reps: usize,
    pub distinct_cosets: usize,
    pub total_cosets: usize,
    pub collisions: Vec<Collision>,
    pub missing: Vec<String>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.collisions.is_empty() && self.missing.is_empty() && self.distinct_cosets == self.total_cosets
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} N={}: {} reps, {} of {} cosets hit",
            self.group, self.level, self.reps, self.distinct_cosets, self.total_cosets
        )?;
        for c in self.collisions.iter().take(5) {
            write!(
                f,
                "; duplicate coset ({}): #{} {} and #{} {}",
                c.coset, c.first, c.first_word, c.second, c.second_word
            )?;
        }
        if self.collisions.len() > 5 {
            write!(f, "; ... {} collisions in all", self.collisions.len())?;
        }
        for m in self.missing.iter().take(5) {
            write!(f, "; missing {m}")?;
        }
        if self.missing.len() > 5 {
            write!(f, "; ... {} missing in all", self.missing.len())?;
        }
        Ok(())
    }
}

fn finish(report: VerificationReport) -> Result<VerificationReport> {
    if report.passed() {
        Ok(report)
    } else {
        Err(Error::VerificationFailed(Box::new(report)))
    }
}

/// Checks that the reps lie in pairwise distinct right cosets and that every
/// coset is hit.
///
/// Each rep is mapped to a complete coset invariant (P¹ class, `±` bottom
/// row, or `±` matrix mod N); equal invariants are confirmed by testing
/// `γᵢγⱼ⁻¹` for membership. The coset space is enumerated mod N, so the
/// index is counted rather than taken from a formula.
pub fn verify(list: &CosetList) -> Result<VerificationReport> {
    let (level, group) = (list.level, list.group);
    let mut first_seen: HashMap<CosetKey, usize> = HashMap::with_capacity(list.len());
    let mut collisions = Vec::new();
    for (j, rep) in list.reps.iter().enumerate() {
        let key = coset_key(group, &rep.matrix, level);
        match first_seen.get(&key) {
            Some(&i) => {
                let quotient = list.reps[i].matrix * rep.matrix.inverse();
                if !group.contains(&quotient, level) {
                    return Err(Error::InternalInvariant(format!(
                        "coset invariant {key} shared by {} and {} outside the subgroup",
                        list.reps[i].word, rep.word
                    )));
                }
                collisions.push(collision(list, i, j, key.to_string()));
            }
            None => {
                first_seen.insert(key, j);
            }
        }
    }
    let distinct = first_seen.len();
    let total = coset_count(group, level);
    let missing = if distinct < total {
        all_coset_keys(group, level)
            .into_iter()
            .filter(|k| !first_seen.contains_key(k))
            .map(|k| k.to_string())
            .collect()
    } else {
        Vec::new()
    };
    finish(VerificationReport {
        level: level.n(),
        group,
        reps: list.len(),
        distinct_cosets: distinct,
        total_cosets: total,
        collisions,
        missing,
    })
}

/// Exhaustive variant of [`verify`]: tests `γᵢγⱼ⁻¹` for membership for
/// every pair `i < j`, in parallel. Quadratic in the list length.
pub fn verify_pairwise(list: &CosetList) -> Result<VerificationReport> {
    let (level, group) = (list.level, list.group);
    let inverses: Vec<Mat2> = list.reps.iter().map(|r| r.matrix.inverse()).collect();
    let mut pairs: Vec<(usize, usize)> = (0..list.len())
        .into_par_iter()
        .flat_map_iter(|i| {
            let gi = list.reps[i].matrix;
            let inverses = &inverses;
            (i + 1..list.len())
                .filter(move |&j| group.contains(&(gi * inverses[j]), level))
                .map(move |j| (i, j))
        })
        .collect();
    pairs.sort_unstable();

    // Number of distinct cosets = reps that are not equivalent to an earlier rep.
    let mut repeated = vec![false; list.len()];
    for &(_, j) in &pairs {
        repeated[j] = true;
    }
    let distinct = repeated.iter().filter(|&&r| !r).count();
    let total = coset_count(group, level);
    let collisions = pairs
        .iter()
        .map(|&(i, j)| {
            let key = coset_key(group, &list.reps[i].matrix, level);
            collision(list, i, j, key.to_string())
        })
        .collect();
    let missing = if distinct < total {
        let hit: BTreeSet<CosetKey> = list
            .reps
            .iter()
            .map(|r| coset_key(group, &r.matrix, level))
            .collect();
        all_coset_keys(group, level)
            .into_iter()
            .filter(|k| !hit.contains(k))
            .map(|k| k.to_string())
            .collect()
    } else {
        Vec::new()
    };
    finish(VerificationReport {
        level: level.n(),
        group,
        reps: list.len(),
        distinct_cosets: distinct,
        total_cosets: total,
        collisions,
        missing,
    })
}

fn collision(list: &CosetList, i: usize, j: usize, coset: String) -> Collision {
    Collision {
        first: i,
        second: j,
        first_word: list.reps[i].word.to_string(),
        second_word: list.reps[j].word.to_string(),
        coset,
    }
}
