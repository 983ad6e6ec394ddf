use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::residues::gcd;

/// A point of Q ∪ {∞} written `p/q` in lowest terms with `q >= 0`.
/// Infinity is stored as `1/0`. Serialized as the string `p/q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Cusp {
    p: i64,
    q: i64,
}

impl Cusp {
    pub const INFINITY: Cusp = Cusp { p: 1, q: 0 };
    pub const ZERO: Cusp = Cusp { p: 0, q: 1 };

    /// Reduces `p/q`. Panics on `0/0`.
    pub fn new(p: i64, q: i64) -> Cusp {
        assert!(p != 0 || q != 0, "0/0 is not a cusp");
        if q == 0 {
            return Cusp::INFINITY;
        }
        let g = gcd(p, q);
        let (p, q) = (p / g, q / g);
        if q < 0 {
            Cusp { p: -p, q: -q }
        } else {
            Cusp { p, q }
        }
    }

    pub fn numerator(&self) -> i64 {
        self.p
    }

    pub fn denominator(&self) -> i64 {
        self.q
    }

    pub fn is_infinity(&self) -> bool {
        self.q == 0
    }

    pub fn to_f64(&self) -> Option<f64> {
        (!self.is_infinity()).then(|| self.p as f64 / self.q as f64)
    }

    /// `∞`, an integer, or `p/q`.
    pub fn pretty(&self) -> String {
        match self.q {
            0 => "∞".to_string(),
            1 => self.p.to_string(),
            _ => format!("{}/{}", self.p, self.q),
        }
    }
}

impl fmt::Display for Cusp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

impl FromStr for Cusp {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "∞" || s.eq_ignore_ascii_case("inf") || s.eq_ignore_ascii_case("oo") {
            return Ok(Cusp::INFINITY);
        }
        let (p, q) = match s.split_once('/') {
            Some((p, q)) => (p.trim(), q.trim()),
            None => (s, "1"),
        };
        let p: i64 = p.parse().map_err(|_| format!("bad numerator in {s:?}"))?;
        let q: i64 = q.parse().map_err(|_| format!("bad denominator in {s:?}"))?;
        if p == 0 && q == 0 {
            return Err("0/0 is not a cusp".into());
        }
        Ok(Cusp::new(p, q))
    }
}

impl TryFrom<String> for Cusp {
    type Error = String;
    fn try_from(s: String) -> Result<Self, String> {
        s.parse()
    }
}

impl From<Cusp> for String {
    fn from(c: Cusp) -> String {
        c.to_string()
    }
}
