//! Letters, freely reduced words and the word grammar.
//!
//! The fundamental group of the pair of pants is free on `a` and `b`; `A` and
//! `B` are their inverses. The shorthands `C = ab` and `c = BA` are accepted
//! on input only.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Longest word the parser is willing to expand.
pub const MAX_EXPANDED_LEN: usize = 1 << 20;

/// A generator or inverse generator.
///
/// The derived order `a < A < b < B` is the order used for canonical
/// rotations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[repr(u8)]
pub enum Letter {
    /// `a`
    A = 0,
    /// `A`
    AInv = 1,
    /// `b`
    B = 2,
    /// `B`
    BInv = 3,
}

impl Letter {
    pub const ALL: [Letter; 4] = [Letter::A, Letter::AInv, Letter::B, Letter::BInv];

    #[inline]
    pub fn inverse(self) -> Letter {
        Letter::from_index(self as usize ^ 1)
    }

    #[inline]
    pub fn index(self) -> usize {
        self as usize
    }

    #[inline]
    pub fn from_index(i: usize) -> Letter {
        Letter::ALL[i & 3]
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::A => 'a',
            Letter::AInv => 'A',
            Letter::B => 'b',
            Letter::BInv => 'B',
        }
    }

    pub fn from_char(ch: char) -> Option<Letter> {
        match ch {
            'a' => Some(Letter::A),
            'A' => Some(Letter::AInv),
            'b' => Some(Letter::B),
            'B' => Some(Letter::BInv),
            _ => None,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// Deletes adjacent inverse pairs until none remain.
pub fn free_reduce<I>(letters: I) -> ReducedWord
where
    I: IntoIterator<Item = Letter>,
{
    let mut stack: Vec<Letter> = Vec::new();
    for x in letters {
        if stack.last() == Some(&x.inverse()) {
            stack.pop();
        } else {
            stack.push(x);
        }
    }
    ReducedWord(stack)
}

/// A freely reduced word, possibly empty.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ReducedWord(Vec<Letter>);

impl ReducedWord {
    pub fn empty() -> Self {
        ReducedWord(Vec::new())
    }

    /// Wraps letters that are already reduced.
    pub(crate) fn from_reduced(letters: Vec<Letter>) -> Self {
        debug_assert!(letters.windows(2).all(|w| w[1] != w[0].inverse()));
        ReducedWord(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> ReducedWord {
        ReducedWord(self.0.iter().rev().map(|x| x.inverse()).collect())
    }

    pub fn concat(&self, other: &ReducedWord) -> ReducedWord {
        free_reduce(self.0.iter().chain(other.0.iter()).copied())
    }

    pub fn pow(&self, n: usize) -> ReducedWord {
        free_reduce(std::iter::repeat_n(self.0.iter().copied(), n).flatten())
    }

    /// True if the first and last letters are not mutually inverse.
    pub fn is_cyclically_reduced(&self) -> bool {
        match (self.0.first(), self.0.last()) {
            (Some(&x), Some(&y)) => self.0.len() == 1 || x != y.inverse(),
            _ => false,
        }
    }

    /// Strips inverse (first, last) pairs; the conjugacy class is unchanged.
    pub fn cyclic_reduction(&self) -> ReducedWord {
        let w = &self.0;
        let (mut lo, mut hi) = (0, w.len());
        while hi - lo >= 2 && w[lo] == w[hi - 1].inverse() {
            lo += 1;
            hi -= 1;
        }
        ReducedWord(w[lo..hi].to_vec())
    }

    /// Display form with `C` for `ab` and `c` for `BA`, substituted greedily.
    pub fn pretty(&self) -> String {
        let w = &self.0;
        let mut out = String::with_capacity(w.len());
        let mut i = 0;
        while i < w.len() {
            match (w[i], w.get(i + 1)) {
                (Letter::A, Some(Letter::B)) => {
                    out.push('C');
                    i += 2;
                }
                (Letter::BInv, Some(Letter::AInv)) => {
                    out.push('c');
                    i += 2;
                }
                (x, _) => {
                    out.push(x.as_char());
                    i += 1;
                }
            }
        }
        out
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for x in &self.0 {
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl FromStr for ReducedWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_word(s)
    }
}

/// Parses the word grammar
///
/// ```text
/// Expr := Item+
/// Item := Atom ["^" PositiveInt]
/// Atom := a | A | b | B | C | c | "(" Expr ")"
/// ```
///
/// and returns the free reduction of the expansion. Whitespace is ignored.
pub fn parse_word(text: &str) -> Result<ReducedWord> {
    let chars: Vec<(usize, char)> = text
        .chars()
        .enumerate()
        .filter(|(_, ch)| !ch.is_whitespace())
        .collect();
    let mut parser = Parser {
        chars: &chars,
        at: 0,
        end: text.chars().count(),
    };
    let letters = parser.expr()?;
    if let Some(&(pos, ch)) = parser.peek() {
        let msg = if ch == ')' {
            "unbalanced ')'".to_string()
        } else {
            format!("unexpected '{ch}'")
        };
        return Err(Error::Syntax { pos, msg });
    }
    Ok(free_reduce(letters))
}

struct Parser<'a> {
    chars: &'a [(usize, char)],
    at: usize,
    end: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&(usize, char)> {
        self.chars.get(self.at)
    }

    fn pos(&self) -> usize {
        self.peek().map_or(self.end, |&(p, _)| p)
    }

    fn error<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            pos: self.pos(),
            msg: msg.into(),
        })
    }

    fn expr(&mut self) -> Result<Vec<Letter>> {
        let mut out = Vec::new();
        let mut items = 0;
        loop {
            match self.peek() {
                None | Some((_, ')')) => break,
                _ => {
                    let item = self.item()?;
                    items += 1;
                    if out.len() + item.len() > MAX_EXPANDED_LEN {
                        return Err(Error::ResourceLimit(format!(
                            "expanded word longer than {MAX_EXPANDED_LEN} letters"
                        )));
                    }
                    out.extend(item);
                }
            }
        }
        if items == 0 {
            return self.error("expected a letter");
        }
        Ok(out)
    }

    fn item(&mut self) -> Result<Vec<Letter>> {
        let atom = self.atom()?;
        if !matches!(self.peek(), Some((_, '^'))) {
            return Ok(atom);
        }
        self.at += 1;
        let start = self.pos();
        let mut digits = String::new();
        while let Some(&(_, ch)) = self.peek() {
            if !ch.is_ascii_digit() {
                break;
            }
            digits.push(ch);
            self.at += 1;
        }
        if digits.is_empty() {
            return self.error("expected exponent after '^'");
        }
        let n: usize = match digits.parse() {
            Ok(n) => n,
            Err(_) => {
                return Err(Error::ResourceLimit(format!("exponent {digits} too large")));
            }
        };
        if n < 1 {
            return Err(Error::Syntax {
                pos: start,
                msg: "exponent must be at least 1".into(),
            });
        }
        if atom.len().saturating_mul(n) > MAX_EXPANDED_LEN {
            return Err(Error::ResourceLimit(format!(
                "expanded word longer than {MAX_EXPANDED_LEN} letters"
            )));
        }
        Ok(atom.repeat(n))
    }

    fn atom(&mut self) -> Result<Vec<Letter>> {
        let Some(&(_, ch)) = self.peek() else {
            return self.error("unexpected end of input");
        };
        let out = match ch {
            'C' => vec![Letter::A, Letter::B],
            'c' => vec![Letter::BInv, Letter::AInv],
            '(' => {
                self.at += 1;
                if matches!(self.peek(), Some((_, ')'))) {
                    return self.error("empty parentheses");
                }
                let inner = self.expr()?;
                if !matches!(self.peek(), Some((_, ')'))) {
                    return self.error("unbalanced '('");
                }
                self.at += 1;
                return Ok(inner);
            }
            '^' => return self.error("exponent with no preceding atom"),
            ch => match Letter::from_char(ch) {
                Some(x) => vec![x],
                None => return self.error(format!("illegal character '{ch}'")),
            },
        };
        self.at += 1;
        Ok(out)
    }
}
