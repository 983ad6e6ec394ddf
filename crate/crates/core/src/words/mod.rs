//! Words in the generators `S` and `T`, their matrices, and the Möbius
//! action on cusps.
//!
//! A [`GroupWord`] keeps its symbolic form (`ST^-3ST^3S`) so that lists,
//! renders and graphs can be labelled the way the representatives are
//! written; [`evaluate`] turns it into a [`Mat2`].
//!
//! Text form: an optional leading `-`, then the tokens `S`, `T` and `T^e`
//! concatenated. The empty word is `I`.

mod cusp;
mod matrix;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use cusp::Cusp;
pub use matrix::{
    in_gamma0, in_gamma_n, in_pm_gamma1, in_pm_gamma_n, mobius_cusp, psl_normalize, row_map, Mat2,
    PslMat,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Letter {
    S,
    /// `T^e` with `e != 0`.
    T(i64),
}

impl Letter {
    pub fn matrix(self) -> Mat2 {
        match self {
            Letter::S => Mat2::S,
            Letter::T(e) => Mat2::t(e),
        }
    }
}

/// `±` a product of `S` and `T^e` tokens. Adjacent `T` tokens are merged and
/// `T^0` is dropped on construction; nothing else is reduced.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct GroupWord {
    letters: Vec<Letter>,
    negative: bool,
}

impl GroupWord {
    pub fn identity() -> GroupWord {
        GroupWord::default()
    }

    pub fn s() -> GroupWord {
        GroupWord::identity().then_s()
    }

    pub fn t(e: i64) -> GroupWord {
        GroupWord::identity().then_t(e)
    }

    pub fn from_letters(letters: impl IntoIterator<Item = Letter>, negative: bool) -> GroupWord {
        let mut w = GroupWord {
            letters: Vec::new(),
            negative,
        };
        for l in letters {
            w.push(l);
        }
        w
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn is_negative(&self) -> bool {
        self.negative
    }

    pub fn push(&mut self, letter: Letter) {
        match letter {
            Letter::S => self.letters.push(Letter::S),
            Letter::T(0) => {}
            Letter::T(e) => match self.letters.last_mut() {
                Some(Letter::T(prev)) => {
                    *prev += e;
                    if *prev == 0 {
                        self.letters.pop();
                    }
                }
                _ => self.letters.push(Letter::T(e)),
            },
        }
    }

    pub fn then_s(mut self) -> GroupWord {
        self.push(Letter::S);
        self
    }

    pub fn then_t(mut self, e: i64) -> GroupWord {
        self.push(Letter::T(e));
        self
    }

    /// The word for the product `self * other`.
    pub fn then(&self, other: &GroupWord) -> GroupWord {
        let mut w = self.clone();
        for &l in &other.letters {
            w.push(l);
        }
        w.negative ^= other.negative;
        w
    }

    pub fn negated(&self) -> GroupWord {
        GroupWord {
            letters: self.letters.clone(),
            negative: !self.negative,
        }
    }

    pub fn evaluate(&self) -> Mat2 {
        evaluate(self)
    }
}

/// The matrix of a word: the product of its generator matrices times its sign.
pub fn evaluate(w: &GroupWord) -> Mat2 {
    let m = w
        .letters
        .iter()
        .fold(Mat2::IDENTITY, |acc, l| acc * l.matrix());
    if w.negative {
        -m
    } else {
        m
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negative {
            f.write_str("-")?;
        }
        if self.letters.is_empty() {
            return f.write_str("I");
        }
        for l in &self.letters {
            match l {
                Letter::S => f.write_str("S")?,
                Letter::T(1) => f.write_str("T")?,
                Letter::T(e) => write!(f, "T^{e}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for GroupWord {
    type Err = Error;

    fn from_str(input: &str) -> Result<Self> {
        let fail = |reason: &str| Error::ParseWord {
            input: input.to_string(),
            reason: reason.to_string(),
        };
        let s = input.trim();
        let (negative, body) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s),
        };
        if body.is_empty() {
            return Err(fail("empty word (use I for the identity)"));
        }
        if body == "I" {
            return Ok(GroupWord::from_letters([], negative));
        }

        let bytes = body.as_bytes();
        let mut letters = Vec::new();
        let mut i = 0;
        while i < bytes.len() {
            match bytes[i] {
                b'S' => {
                    letters.push(Letter::S);
                    i += 1;
                }
                b'T' => {
                    i += 1;
                    if bytes.get(i) != Some(&b'^') {
                        letters.push(Letter::T(1));
                        continue;
                    }
                    i += 1;
                    let braced = bytes.get(i) == Some(&b'{');
                    if braced {
                        i += 1;
                    }
                    let start = i;
                    if matches!(bytes.get(i), Some(b'-') | Some(b'+')) {
                        i += 1;
                    }
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    let e: i64 = body[start..i]
                        .parse()
                        .map_err(|_| fail("expected an integer exponent after T^"))?;
                    if braced {
                        if bytes.get(i) != Some(&b'}') {
                            return Err(fail("unclosed brace in exponent"));
                        }
                        i += 1;
                    }
                    letters.push(Letter::T(e));
                }
                other => {
                    return Err(fail(&format!("unexpected character {:?}", other as char)));
                }
            }
        }
        Ok(GroupWord::from_letters(letters, negative))
    }
}

impl TryFrom<String> for GroupWord {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<GroupWord> for String {
    fn from(w: GroupWord) -> String {
        w.to_string()
    }
}
