//! Cusps of Γ₀(N): equivalence, class representatives, widths, and the
//! per-`j` and per-class tables for Θ₀(N).

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::cosets::{theta0, CosetList};
use crate::error::Result;
use crate::projline::m_table;
use crate::residues::{ext_gcd, gcd, Level};
use crate::words::Cusp;

/// `γ(∞)` for each rep, in list order.
pub fn cusps_of(list: &CosetList) -> Vec<Cusp> {
    list.reps().iter().map(|r| r.cusp()).collect()
}

/// Whether some element of Γ₀(N) maps `c1` to `c2`.
///
/// With `p·s ≡ 1 (mod q)` for each cusp `p/q`, the test is
/// `s1·q2 ≡ s2·q1 (mod gcd(q1·q2, N))`.
pub fn cusp_equivalent(c1: Cusp, c2: Cusp, level: Level) -> bool {
    let n = level.n() as i128;
    let (p1, q1) = (c1.numerator(), c1.denominator());
    let (p2, q2) = (c2.numerator(), c2.denominator());
    // Only s mod q matters; at infinity (1/0) s = 1.
    let s1 = ext_gcd(p1, q1).1 as i128;
    let s2 = ext_gcd(p2, q2).1 as i128;
    let (q1, q2) = (q1 as i128, q2 as i128);
    let modulus = gcd(((q1 % n) * (q2 % n) % n) as i64, n as i64) as i128;
    (s1 * q2 - s2 * q1).rem_euclid(modulus) == 0
}

/// `N / gcd(q², N)`; 1 at infinity.
pub fn cusp_width(c: Cusp, level: Level) -> u64 {
    let n = level.n();
    let g = gcd(c.denominator(), n);
    (n / gcd(g * g, n)) as u64
}

/// `∞` if `N | q`; otherwise `a/d` with `d = gcd(q, N)` and the least
/// `a >= 0` coprime to `d` that is equivalent (so `0` when `d = 1`).
pub fn cusp_class_representative(c: Cusp, level: Level) -> Cusp {
    let n = level.n();
    let d = gcd(c.denominator(), n);
    if d == n {
        return Cusp::INFINITY;
    }
    // Equivalent cusps have the same d, and every class contains some a/d
    // with a below d*N.
    (0..d * n)
        .filter(|&a| gcd(a, d) == 1)
        .map(|a| Cusp::new(a, d))
        .find(|&cand| cusp_equivalent(cand, c, level))
        .expect("every cusp class has a representative with denominator gcd(q, N)")
}

/// Order of classes in tables: finite reps by `(q, p)`, then `∞`, then `0`.
fn class_order(c: &Cusp) -> (u8, i64, i64) {
    if c.is_infinity() {
        (1, 0, 0)
    } else if *c == Cusp::ZERO {
        (2, 0, 0)
    } else {
        (0, c.denominator(), c.numerator())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CuspClass {
    pub representative: Cusp,
    pub width: u64,
    /// Cusps of Θ₀(N) in the class with their multiplicities, in list order.
    pub members: Vec<(Cusp, usize)>,
}

impl CuspClass {
    pub fn multiplicity(&self) -> usize {
        self.members.iter().map(|(_, k)| k).sum()
    }
}

/// The cusp `-1/j` of `ST^j S T^m`, its count `M_j + 1` and its class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CuspRow {
    pub j: i64,
    pub cusp: Cusp,
    pub multiplicity: u64,
    pub representative: Cusp,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CuspClassTable {
    level: Level,
    rows: Vec<CuspRow>,
    classes: Vec<CuspClass>,
}

pub fn cusp_table(level: Level) -> CuspClassTable {
    let mt = m_table(level);
    let mut js: Vec<i64> = mt.iter().map(|(j, _)| j).filter(|&j| j != 0).collect();
    js.sort_by_key(|&j| (j < 0, j));
    let rows = js
        .into_iter()
        .map(|j| {
            let cusp = Cusp::new(-1, j);
            CuspRow {
                j,
                cusp,
                multiplicity: mt.get(j).expect("j comes from the table") + 1,
                representative: cusp_class_representative(cusp, level),
            }
        })
        .collect();

    type Members = (Cusp, Vec<(Cusp, usize)>);
    let mut members: BTreeMap<(u8, i64, i64), Members> = BTreeMap::new();
    for c in cusps_of(&theta0(level)) {
        let rep = cusp_class_representative(c, level);
        let (_, list) = members
            .entry(class_order(&rep))
            .or_insert_with(|| (rep, Vec::new()));
        match list.iter_mut().find(|(m, _)| *m == c) {
            Some((_, k)) => *k += 1,
            None => list.push((c, 1)),
        }
    }
    let classes = members
        .into_values()
        .map(|(representative, members)| CuspClass {
            representative,
            width: cusp_width(representative, level),
            members,
        })
        .collect();

    CuspClassTable {
        level,
        rows,
        classes,
    }
}

impl CuspClassTable {
    pub fn level(&self) -> Level {
        self.level
    }

    /// One row per nonzero nonunit `j`: positive `j` ascending, then negative.
    pub fn rows(&self) -> &[CuspRow] {
        &self.rows
    }

    pub fn classes(&self) -> &[CuspClass] {
        &self.classes
    }

    pub fn total_width(&self) -> u64 {
        self.classes.iter().map(|c| c.width).sum()
    }

    /// Two aligned tables: the per-`j` table, a blank line, the widths.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&grid(&[
            ("j", self.rows.iter().map(|r| r.j.to_string()).collect()),
            ("cusp", self.rows.iter().map(|r| r.cusp.pretty()).collect()),
            ("M_j+1", self.rows.iter().map(|r| r.multiplicity.to_string()).collect()),
            ("cusp rep", self.rows.iter().map(|r| r.representative.pretty()).collect()),
        ]));
        out.push('\n');
        out.push_str(&grid(&[
            ("cusp rep", self.classes.iter().map(|c| c.representative.pretty()).collect()),
            ("width", self.classes.iter().map(|c| c.width.to_string()).collect()),
        ]));
        out
    }

    /// Both tables in long form: `table` is `cusps` for per-`j` rows and
    /// `widths` for per-class rows. Cusps are written `p/q` (`1/0` is ∞).
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["table", "j", "cusp", "multiplicity", "representative", "width"])?;
        for r in &self.rows {
            let width = cusp_width(r.representative, self.level);
            w.write_record([
                "cusps".to_string(),
                r.j.to_string(),
                r.cusp.to_string(),
                r.multiplicity.to_string(),
                r.representative.to_string(),
                width.to_string(),
            ])?;
        }
        for c in &self.classes {
            w.write_record([
                "widths".to_string(),
                String::new(),
                c.representative.to_string(),
                c.multiplicity().to_string(),
                c.representative.to_string(),
                c.width.to_string(),
            ])?;
        }
        let bytes = w.into_inner().map_err(|e| e.into_error())?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }
}

/// Rows of `header | cell | cell ...` with every column padded to its widest
/// cell.
fn grid(rows: &[(&str, Vec<String>)]) -> String {
    let cols = rows.iter().map(|(_, cells)| cells.len()).max().unwrap_or(0);
    let width = |cells: Vec<usize>| cells.into_iter().max().unwrap_or(0);
    let head_w = width(rows.iter().map(|(h, _)| h.chars().count()).collect());
    let col_w: Vec<usize> = (0..cols)
        .map(|i| width(rows.iter().map(|(_, c)| c[i].chars().count()).collect()))
        .collect();
    let mut out = String::new();
    for (head, cells) in rows {
        let mut line = format!("{head:<head_w$}");
        for (cell, w) in cells.iter().zip(&col_w) {
            let _ = write!(line, " | {cell:<w$}");
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lv(n: i64) -> Level {
        Level::new(n).unwrap()
    }

    fn c(s: &str) -> Cusp {
        s.parse().unwrap()
    }

    #[test]
    fn equivalence_examples() {
        let l = lv(30);
        assert!(cusp_equivalent(c("-1/4"), c("1/2"), l));
        assert!(cusp_equivalent(c("-1/5"), c("1/5"), l));
        assert!(!cusp_equivalent(c("-1/5"), c("1/2"), l));
        for s in ["0", "∞", "3/7", "-1/15"] {
            assert!(cusp_equivalent(c(s), c(s), l));
        }
        assert!(cusp_equivalent(c("1/30"), Cusp::INFINITY, l));
        assert!(!cusp_equivalent(c("1/15"), Cusp::INFINITY, l));
    }

    #[test]
    fn widths() {
        let l = lv(30);
        assert_eq!(cusp_width(Cusp::INFINITY, l), 1);
        assert_eq!(cusp_width(Cusp::ZERO, l), 30);
        assert_eq!(cusp_width(c("1/2"), l), 15);
        assert_eq!(cusp_width(c("1/15"), l), 2);
        assert_eq!(cusp_width(c("1/2"), lv(4)), 1);
    }

    #[test]
    fn representatives() {
        let l = lv(30);
        assert_eq!(cusp_class_representative(c("-1/4"), l), c("1/2"));
        assert_eq!(cusp_class_representative(c("1/14"), l), c("1/2"));
        assert_eq!(cusp_class_representative(c("-1/12"), l), c("1/6"));
        assert_eq!(cusp_class_representative(c("5/7"), l), Cusp::ZERO);
        assert_eq!(cusp_class_representative(c("-1/30"), l), Cusp::INFINITY);
    }

    #[test]
    fn table_thirty() {
        let t = cusp_table(lv(30));
        let reps: Vec<String> = t.classes().iter().map(|k| k.representative.pretty()).collect();
        assert_eq!(reps, ["1/2", "1/3", "1/5", "1/6", "1/10", "1/15", "∞", "0"]);
        let widths: Vec<u64> = t.classes().iter().map(|k| k.width).collect();
        assert_eq!(widths, [15, 10, 6, 5, 3, 2, 1, 30]);
        assert_eq!(t.total_width(), 72);
        for k in t.classes() {
            assert_eq!(k.multiplicity() as u64, k.width, "class {}", k.representative);
        }
        let js: Vec<i64> = t.rows().iter().map(|r| r.j).collect();
        assert_eq!(
            js,
            [2, 3, 4, 5, 6, 8, 9, 10, 12, 14, 15, -14, -12, -10, -9, -8, -6, -5, -4, -3, -2]
        );
    }

    #[test]
    fn table_four() {
        let t = cusp_table(lv(4));
        let got: Vec<(String, u64)> = t
            .classes()
            .iter()
            .map(|k| (k.representative.pretty(), k.width))
            .collect();
        assert_eq!(got, [("1/2".into(), 1), ("∞".into(), 1), ("0".into(), 4)]);
    }

    #[test]
    fn csv_shape() {
        let csv = cusp_table(lv(6)).to_csv().unwrap();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "table,j,cusp,multiplicity,representative,width");
        assert!(lines.contains(&"cusps,2,-1/2,1,1/2,3"));
        assert!(lines.contains(&"widths,,0/1,6,0/1,6"));
    }
}
