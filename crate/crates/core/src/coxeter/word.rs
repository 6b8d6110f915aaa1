//! Words in the Brauer monoid generators.
//!
//! Grammar: whitespace-separated tokens `r<i>`, `e<i>` (1-based node), `d`
//! (δ) and `D` (δ⁻¹), e.g. `e1 r2 e1 D`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A single generator. Node indices are 0-based internally.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Token {
    R(usize),
    E(usize),
    Delta,
    DeltaInv,
}

impl Token {
    pub fn node(self) -> Option<usize> {
        match self {
            Token::R(i) | Token::E(i) => Some(i),
            _ => None,
        }
    }
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::R(i) => write!(f, "r{}", i + 1),
            Token::E(i) => write!(f, "e{}", i + 1),
            Token::Delta => write!(f, "d"),
            Token::DeltaInv => write!(f, "D"),
        }
    }
}

impl FromStr for Token {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidToken(s.to_string());
        match s {
            "d" => return Ok(Token::Delta),
            "D" => return Ok(Token::DeltaInv),
            _ => {}
        }
        let (head, num) = s.split_at(s.char_indices().nth(1).map_or(s.len(), |(i, _)| i));
        let node: usize = num.parse().map_err(|_| bad())?;
        if node == 0 {
            return Err(bad());
        }
        match head {
            "r" => Ok(Token::R(node - 1)),
            "e" => Ok(Token::E(node - 1)),
            _ => Err(bad()),
        }
    }
}

/// A finite word in `{r_i, e_i, δ, δ⁻¹}`, read left to right as a product.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct GenWord(Vec<Token>);

impl GenWord {
    pub fn new(tokens: Vec<Token>) -> Self {
        GenWord(tokens)
    }

    pub fn empty() -> Self {
        GenWord(Vec::new())
    }

    pub fn tokens(&self) -> &[Token] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, t: Token) {
        self.0.push(t);
    }

    pub fn extend_from(&mut self, other: &GenWord) {
        self.0.extend_from_slice(&other.0);
    }

    pub fn concat(&self, other: &GenWord) -> GenWord {
        let mut w = self.clone();
        w.extend_from(other);
        w
    }

    /// The opposite word, read backwards.
    pub fn reversed(&self) -> GenWord {
        GenWord(self.0.iter().rev().copied().collect())
    }

    /// Word of simple reflections for 0-based nodes.
    pub fn from_reflections(nodes: &[usize]) -> GenWord {
        GenWord(nodes.iter().map(|&i| Token::R(i)).collect())
    }

    /// `δ^k` as `d` or `D` tokens.
    pub fn delta_power(k: i64) -> GenWord {
        let t = if k >= 0 { Token::Delta } else { Token::DeltaInv };
        GenWord(vec![t; k.unsigned_abs() as usize])
    }

    /// Check every node index against the rank.
    pub fn validate(&self, rank: usize) -> Result<()> {
        for t in &self.0 {
            if let Some(i) = t.node() {
                if i >= rank {
                    return Err(Error::NodeOutOfRange { node: i + 1, rank });
                }
            }
        }
        Ok(())
    }
}

impl FromStr for GenWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.split_whitespace().map(Token::from_str).collect::<Result<Vec<_>>>().map(GenWord)
    }
}

impl fmt::Display for GenWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|t| t.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl FromIterator<Token> for GenWord {
    fn from_iter<I: IntoIterator<Item = Token>>(iter: I) -> Self {
        GenWord(iter.into_iter().collect())
    }
}
