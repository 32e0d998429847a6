use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Z2-degree of a basis vector. Even letters are parafermionic, odd letters
/// parabosonic.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn bit(self) -> u8 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn from_bit(b: u8) -> Self {
        if b % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// Letter of the signed alphabet `1 < … < m < 1' < … < n'`.
///
/// The derived order compares parity first, so every even letter precedes
/// every odd one regardless of `m`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedLetter {
    parity: Parity,
    index: u32,
}

impl SignedLetter {
    /// Panics if `index == 0`.
    pub fn new(parity: Parity, index: u32) -> Self {
        assert!(index >= 1, "letter indices start at 1");
        Self { parity, index }
    }

    pub fn even(index: u32) -> Self {
        Self::new(Parity::Even, index)
    }

    pub fn odd(index: u32) -> Self {
        Self::new(Parity::Odd, index)
    }

    pub fn parity(self) -> Parity {
        self.parity
    }

    pub fn is_odd(self) -> bool {
        self.parity == Parity::Odd
    }

    /// 0 for even, 1 for odd.
    pub fn bit(self) -> u8 {
        self.parity.bit()
    }

    pub fn index(self) -> u32 {
        self.index
    }

    /// One-based position in the alphabet of `m` even letters.
    pub fn rank(self, m: usize) -> usize {
        match self.parity {
            Parity::Even => self.index as usize,
            Parity::Odd => m + self.index as usize,
        }
    }

    /// Inverse of [`SignedLetter::rank`].
    pub fn from_rank(rank: usize, m: usize) -> Self {
        if rank <= m {
            Self::even(rank as u32)
        } else {
            Self::odd((rank - m) as u32)
        }
    }
}

impl fmt::Display for SignedLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.parity {
            Parity::Even => write!(f, "{}", self.index),
            Parity::Odd => write!(f, "{}'", self.index),
        }
    }
}

impl fmt::Debug for SignedLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for SignedLetter {
    type Err = Error;

    /// A positive integer with an optional trailing apostrophe for odd letters.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (digits, parity) = match s.strip_suffix('\'') {
            Some(d) => (d, Parity::Odd),
            None => (s, Parity::Even),
        };
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::Parse(format!("bad letter {s:?}")));
        }
        let index: u32 = digits
            .parse()
            .map_err(|_| Error::Parse(format!("bad letter {s:?}")))?;
        if index == 0 {
            return Err(Error::Parse(format!("letter index must be positive: {s:?}")));
        }
        Ok(Self::new(parity, index))
    }
}

impl Serialize for SignedLetter {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for SignedLetter {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The `m|n` signed alphabet.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Alphabet {
    pub m: usize,
    pub n: usize,
}

impl Alphabet {
    pub fn new(m: usize, n: usize) -> Self {
        Self { m, n }
    }

    pub fn size(&self) -> usize {
        self.m + self.n
    }

    /// All letters in increasing order.
    pub fn letters(&self) -> Vec<SignedLetter> {
        (1..=self.size())
            .map(|r| SignedLetter::from_rank(r, self.m))
            .collect()
    }

    pub fn contains(&self, a: SignedLetter) -> bool {
        match a.parity() {
            Parity::Even => (a.index() as usize) <= self.m,
            Parity::Odd => (a.index() as usize) <= self.n,
        }
    }

    /// Zero-based position, for indexing variables and basis vectors.
    pub fn position(&self, a: SignedLetter) -> usize {
        a.rank(self.m) - 1
    }

    pub fn check(&self, a: SignedLetter) -> Result<()> {
        if self.contains(a) {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch {
                letter: a.to_string(),
                m: self.m,
                n: self.n,
            })
        }
    }
}

/// Sequence of signed letters; an element of the free monoid.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SignedWord(pub Vec<SignedLetter>);

impl SignedWord {
    pub fn new(letters: Vec<SignedLetter>) -> Self {
        Self(letters)
    }

    pub fn letters(&self) -> &[SignedLetter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Z2-degree: sum of letter parities mod 2.
    pub fn parity(&self) -> u8 {
        self.0.iter().map(|a| a.bit()).sum::<u8>() % 2
    }

    pub fn concat(&self, other: &SignedWord) -> SignedWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        SignedWord(v)
    }

    /// All words of length `r` over `alphabet`, lexicographic order.
    pub fn all_words(alphabet: Alphabet, r: usize) -> Vec<SignedWord> {
        let letters = alphabet.letters();
        let mut out = vec![SignedWord::default()];
        for _ in 0..r {
            out = out
                .into_iter()
                .flat_map(|w| {
                    letters.iter().map(move |a| {
                        let mut v = w.0.clone();
                        v.push(*a);
                        SignedWord(v)
                    })
                })
                .collect();
        }
        out
    }

    /// Index of this word in [`SignedWord::all_words`].
    pub fn lex_index(&self, alphabet: Alphabet) -> usize {
        let base = alphabet.size();
        self.0
            .iter()
            .fold(0, |acc, a| acc * base + alphabet.position(*a))
    }
}

impl From<Vec<SignedLetter>> for SignedWord {
    fn from(v: Vec<SignedLetter>) -> Self {
        Self(v)
    }
}

impl fmt::Display for SignedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for SignedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for SignedWord {
    type Err = Error;

    /// Comma separated letters, e.g. `1,1',2`. The empty string is the empty word.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::default());
        }
        s.split(',').map(str::parse).collect::<Result<Vec<_>>>().map(Self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_puts_evens_first() {
        let a = Alphabet::new(2, 2);
        let ls = a.letters();
        assert_eq!(
            ls,
            vec![
                SignedLetter::even(1),
                SignedLetter::even(2),
                SignedLetter::odd(1),
                SignedLetter::odd(2)
            ]
        );
        assert!(ls.windows(2).all(|w| w[0] < w[1]));
        for (i, l) in ls.iter().enumerate() {
            assert_eq!(l.rank(2), i + 1);
            assert_eq!(SignedLetter::from_rank(i + 1, 2), *l);
        }
    }

    #[test]
    fn parse_letters_and_words() {
        assert_eq!("3'".parse::<SignedLetter>().unwrap(), SignedLetter::odd(3));
        assert_eq!("12".parse::<SignedLetter>().unwrap(), SignedLetter::even(12));
        for bad in ["", "0", "'", "a", "1''", "-1", "bogus"] {
            assert!(bad.parse::<SignedLetter>().is_err(), "{bad}");
        }
        let w: SignedWord = "1,1',2".parse().unwrap();
        assert_eq!(w.to_string(), "1,1',2");
        assert_eq!(w.parity(), 1);
        assert!("1,,2".parse::<SignedWord>().is_err());
    }

    #[test]
    fn lex_index_matches_enumeration() {
        let a = Alphabet::new(1, 2);
        for (i, w) in SignedWord::all_words(a, 3).iter().enumerate() {
            assert_eq!(w.lex_index(a), i);
        }
    }
}
