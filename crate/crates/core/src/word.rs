//! Freely and cyclically reduced words over the surface-group alphabet.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::letters::{Letter, LetterParseError};

/// A freely reduced word. The constructor reduces, so the invariant
/// (no letter followed by its inverse) always holds.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn empty() -> Word {
        Word { letters: Vec::new() }
    }

    /// Build from letters, freely reducing.
    pub fn new(letters: impl IntoIterator<Item = Letter>) -> Word {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word { letters: out }
    }

    pub fn single(l: Letter) -> Word {
        Word { letters: vec![l] }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// Concatenation followed by free reduction.
    pub fn concat(&self, rhs: &Word) -> Word {
        let mut out = self.letters.clone();
        for &l in &rhs.letters {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word { letters: out }
    }

    pub fn pow(&self, n: usize) -> Word {
        let mut out = Word::empty();
        for _ in 0..n {
            out = out.concat(self);
        }
        out
    }

    /// Conjugate g·self·g⁻¹.
    pub fn conjugate_by(&self, g: &Word) -> Word {
        g.concat(self).concat(&g.inverse())
    }

    /// Splits off the maximal v with self = v·core·v⁻¹ and core cyclically
    /// reduced. Returns (v, core).
    pub fn cyclic_reduce(&self) -> (Word, Word) {
        let mut lo = 0usize;
        let mut hi = self.letters.len();
        while hi - lo >= 2 && self.letters[lo] == self.letters[hi - 1].inverse() {
            lo += 1;
            hi -= 1;
        }
        let v = Word {
            letters: self.letters[..lo].to_vec(),
        };
        let core = Word {
            letters: self.letters[lo..hi].to_vec(),
        };
        (v, core)
    }

    /// Shortlex comparison: length first, then letter rank.
    pub fn shortlex_cmp(&self, other: &Word) -> std::cmp::Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.letters.cmp(&other.letters))
    }

    /// Parse whitespace-separated tokens ("a1 b1 A1"); empty input is the
    /// identity. The result is freely reduced.
    pub fn parse(text: &str) -> Result<Word, LetterParseError> {
        let letters: Result<Vec<Letter>, _> =
            text.split_whitespace().map(Letter::parse).collect();
        Ok(Word::new(letters?))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for l in &self.letters {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

impl TryFrom<String> for Word {
    type Error = LetterParseError;
    fn try_from(s: String) -> Result<Word, LetterParseError> {
        Word::parse(&s)
    }
}

impl From<Word> for String {
    fn from(w: Word) -> String {
        w.to_string()
    }
}

/// A conjugacy-class representative: cyclically reduced, rotated to the
/// lexicographically least position among all rotations.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct CyclicWord {
    word: Word,
}

impl CyclicWord {
    pub fn new(w: &Word) -> CyclicWord {
        let (_, core) = w.cyclic_reduce();
        if core.is_empty() {
            return CyclicWord { word: core };
        }
        let n = core.len();
        let mut best: Option<Vec<Letter>> = None;
        for r in 0..n {
            let rot: Vec<Letter> = core
                .letters()
                .iter()
                .cycle()
                .skip(r)
                .take(n)
                .copied()
                .collect();
            if best.as_ref().map_or(true, |b| rot < *b) {
                best = Some(rot);
            }
        }
        CyclicWord {
            word: Word {
                letters: best.unwrap(),
            },
        }
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }
}

/// Deterministic uniform sample over freely reduced words of the given
/// length: first letter uniform over 4g, each later letter uniform over the
/// 4g-1 non-cancelling choices.
pub fn random_word(genus: u8, length: usize, seed: u64) -> Word {
    let alphabet = Letter::alphabet(genus);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut letters: Vec<Letter> = Vec::with_capacity(length);
    for _ in 0..length {
        let choices: Vec<Letter> = alphabet
            .iter()
            .copied()
            .filter(|l| letters.last() != Some(&l.inverse()))
            .collect();
        letters.push(choices[rng.gen_range(0..choices.len())]);
    }
    let w = Word { letters };
    debug_assert_eq!(w.len(), length);
    w
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn free_reduce_examples() {
        assert_eq!(w("a1 A1 b1"), w("b1"));
        assert_eq!(w(""), Word::empty());
        assert_eq!(w("a1 b2 B2 A1 a2"), w("a2"));
    }

    #[test]
    fn reduction_is_idempotent() {
        let x = w("a1 b1 B1 A1 a2 a2 A2");
        assert_eq!(Word::new(x.letters().to_vec()), x);
    }

    #[test]
    fn inverse_concat_cancels() {
        let x = w("a1 b1 a2 B2");
        assert!(x.concat(&x.inverse()).is_empty());
    }

    #[test]
    fn cyclic_reduction() {
        let x = w("b1 a1 a1 B1");
        let (v, core) = x.cyclic_reduce();
        assert_eq!(v, w("b1"));
        assert_eq!(core, w("a1 a1"));
    }

    #[test]
    fn cyclic_word_canonical_rotation() {
        let x = CyclicWord::new(&w("b1 a1"));
        let y = CyclicWord::new(&w("a1 b1"));
        assert_eq!(x, y);
        assert_eq!(x.word(), &w("a1 b1"));
    }

    #[test]
    fn random_word_deterministic() {
        let a = random_word(2, 5, 99);
        let b = random_word(2, 5, 99);
        assert_eq!(a, b);
        assert_eq!(a.len(), 5);
        assert_eq!(random_word(2, 0, 7), Word::empty());
        assert_eq!(random_word(2, 1, 3).len(), 1);
    }
}
