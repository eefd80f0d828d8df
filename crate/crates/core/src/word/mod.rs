//! Words in `x`, `y` and the algebra `H_t = Q<x, y>[t]`.

mod maps;
mod products;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::combo::LinComb;
use crate::error::{Error, Result};
use crate::index::{Index, IndexCombo};
use crate::tpoly::TPoly;

pub use maps::{
    affix, alpha_tilde, derivation, derivation_twisted, nu_map, phi_t, phi_word, s_transform,
    sigma_sub, Affix, Sign,
};
pub use products::{
    concat, harmonic, shuffle, shuffle_words, t_harmonic, t_harmonic_recursive, t_shuffle,
    t_shuffle_recursive,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    X,
    Y,
}

impl Letter {
    pub fn swapped(self) -> Self {
        match self {
            Letter::X => Letter::Y,
            Letter::Y => Letter::X,
        }
    }
}

/// A word over `{x, y}`; the empty word is the unit `1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Word(Vec<Letter>);

pub type WordCombo = LinComb<Word>;

impl Word {
    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn from_letters(letters: Vec<Letter>) -> Self {
        Self(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<Letter> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<Letter> {
        self.0.last().copied()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// `z_k = y x^(k-1)`.
    pub fn z(k: u32) -> Word {
        assert!(k >= 1);
        let mut v = vec![Letter::Y];
        v.extend(std::iter::repeat_n(Letter::X, k as usize - 1));
        Word(v)
    }

    /// Empty or y-leading.
    pub fn in_h1(&self) -> bool {
        self.first() != Some(Letter::X)
    }

    /// Empty, or y-leading and x-trailing.
    pub fn in_h0(&self) -> bool {
        self.is_empty() || self.in_yhx()
    }

    pub fn in_yhx(&self) -> bool {
        self.first() == Some(Letter::Y) && self.last() == Some(Letter::X)
    }

    pub fn text(&self) -> String {
        self.0
            .iter()
            .map(|l| match l {
                Letter::X => 'x',
                Letter::Y => 'y',
            })
            .collect()
    }
}

impl FromStr for Word {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "1" {
            return Ok(Word::empty());
        }
        s.chars()
            .map(|c| match c {
                'x' => Ok(Letter::X),
                'y' => Ok(Letter::Y),
                _ => Err(Error::ParseWord(s.to_string())),
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

impl TryFrom<String> for Word {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<Word> for String {
    fn from(w: Word) -> Self {
        w.text()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", self.text())
        }
    }
}

pub(crate) fn domain_error(w: &Word, space: &'static str) -> Error {
    Error::Domain {
        word: w.to_string(),
        space,
    }
}

pub(crate) fn require_h1(v: &WordCombo) -> Result<()> {
    match v.keys().find(|w| !w.in_h1()) {
        Some(w) => Err(domain_error(w, "H^1 (empty or y-leading)")),
        None => Ok(()),
    }
}

/// `(k_1, ..., k_r) -> z_{k_1} ... z_{k_r}`.
pub fn index_to_word(k: &Index) -> Word {
    Word(k.parts().iter().flat_map(|&p| Word::z(p).0).collect())
}

/// Inverse of [`index_to_word`] on `H^1`.
pub fn word_to_index(w: &Word) -> Result<Index> {
    if !w.in_h1() {
        return Err(domain_error(w, "H^1 (empty or y-leading)"));
    }
    let mut parts: Vec<u32> = Vec::new();
    for l in &w.0 {
        match l {
            Letter::Y => parts.push(1),
            Letter::X => *parts.last_mut().expect("y-leading") += 1,
        }
    }
    Ok(Index::of(&parts))
}

pub fn index_combo_to_words(v: &IndexCombo) -> WordCombo {
    v.map_linear(|k| WordCombo::basis(index_to_word(k)))
}

pub fn word_combo_to_indices(v: &WordCombo) -> Result<IndexCombo> {
    v.try_map_linear(|w| word_to_index(w).map(IndexCombo::basis))
}

/// Parses a single word into a combination with coefficient 1.
pub fn word(s: &str) -> WordCombo {
    WordCombo::basis(s.parse().expect("word text"))
}

/// A combination from `(coefficient, word)` pairs with integer coefficients.
pub fn words(terms: &[(i64, &str)]) -> WordCombo {
    let mut out = WordCombo::zero();
    for &(c, s) in terms {
        out.add_term(s.parse().expect("word text"), &TPoly::int(c));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::index::indices_up_to;

    #[test]
    fn z_encoding() {
        assert_eq!(index_to_word(&Index::of(&[2, 1])).text(), "yxy");
        assert_eq!(word_to_index(&"yyx".parse().unwrap()).unwrap(), Index::of(&[1, 2]));
        assert!(matches!(word_to_index(&"xy".parse().unwrap()), Err(Error::Domain { .. })));
        assert_eq!(word_to_index(&Word::empty()).unwrap(), Index::empty());
    }

    #[test]
    fn z_round_trip() {
        for k in indices_up_to(8, 8) {
            assert_eq!(word_to_index(&index_to_word(&k)).unwrap(), k);
        }
    }

    #[test]
    fn membership() {
        let w = |s: &str| s.parse::<Word>().unwrap();
        assert!(w("1").in_h1() && w("1").in_h0() && !w("1").in_yhx());
        assert!(w("yx").in_h1() && w("yx").in_h0() && w("yx").in_yhx());
        assert!(w("yy").in_h1() && !w("yy").in_h0());
        assert!(!w("xy").in_h1());
        assert!("xz".parse::<Word>().is_err());
    }
}
