//! Reduced words in the universal Coxeter group on `n` generators.
//!
//! The only relations are `s_i^2 = 1`, so every element has a unique word
//! with no two equal adjacent letters.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A reduced word; letters are 1-based generator labels.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupWord(Vec<usize>);

fn push_reduced(buf: &mut Vec<usize>, x: usize) {
    if buf.last() == Some(&x) {
        buf.pop();
    } else {
        buf.push(x);
    }
}

impl GroupWord {
    pub fn identity() -> Self {
        GroupWord(Vec::new())
    }

    pub fn generator(i: usize) -> Self {
        GroupWord(vec![i])
    }

    /// Reduces an arbitrary letter sequence.
    pub fn from_letters<I: IntoIterator<Item = usize>>(letters: I) -> Self {
        let mut buf = Vec::new();
        for x in letters {
            push_reduced(&mut buf, x);
        }
        GroupWord(buf)
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &GroupWord) -> GroupWord {
        let mut buf = self.0.clone();
        for &x in &other.0 {
            push_reduced(&mut buf, x);
        }
        GroupWord(buf)
    }

    pub fn inverse(&self) -> GroupWord {
        GroupWord(self.0.iter().rev().copied().collect())
    }

    /// `self * x * self^{-1}`.
    pub fn conjugate(&self, x: &GroupWord) -> GroupWord {
        self.mul(x).mul(&self.inverse())
    }

    pub fn pow(&self, e: u32) -> GroupWord {
        (0..e).fold(GroupWord::identity(), |acc, _| acc.mul(self))
    }

    pub fn max_letter(&self) -> usize {
        self.0.iter().copied().max().unwrap_or(0)
    }
}

pub fn word_mul(a: &GroupWord, b: &GroupWord) -> GroupWord {
    a.mul(b)
}

pub fn word_inv(a: &GroupWord) -> GroupWord {
    a.inverse()
}

impl std::ops::Mul for &GroupWord {
    type Output = GroupWord;
    fn mul(self, rhs: &GroupWord) -> GroupWord {
        GroupWord::mul(self, rhs)
    }
}

/// `2,1,2`; the identity prints as `e`.
impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("e");
        }
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl fmt::Debug for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{self}>")
    }
}

impl FromStr for GroupWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "e" || s.is_empty() {
            return Ok(GroupWord::identity());
        }
        let mut letters = Vec::new();
        let mut column = 1;
        for tok in s.split(',') {
            let t = tok.trim();
            match t.parse::<usize>() {
                Ok(v) if v >= 1 => letters.push(v),
                _ => return Err(Error::parse(1, column, format!("bad generator {t:?}"))),
            }
            column += tok.len() + 1;
        }
        Ok(GroupWord::from_letters(letters))
    }
}
