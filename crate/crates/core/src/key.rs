//! Compact hashable word keys.
//!
//! Letters pack into 4-bit codes when the alphabet allows it (codes ≤ 15,
//! i.e. generator index ≤ 7) and the word fits 31 letters; the top nibble
//! stays clear so length is implicit in the highest set nibble. Longer words
//! or bigger alphabets fall back to a boxed slice. The packing rule is a pure
//! function of the word, so equal words always get equal keys.

use crate::letters::Letter;
use crate::word::Word;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum WordKey {
    Packed(u128),
    Heap(Box<[i8]>),
}

impl WordKey {
    pub fn from_letters(letters: &[Letter]) -> WordKey {
        if letters.len() <= 31 && letters.iter().all(|l| l.code() <= 15) {
            let mut bits: u128 = 0;
            for (i, l) in letters.iter().enumerate() {
                bits |= (l.code() as u128) << (4 * i);
            }
            WordKey::Packed(bits)
        } else {
            WordKey::Heap(letters.iter().map(|l| l.raw()).collect())
        }
    }

    pub fn from_word(w: &Word) -> WordKey {
        WordKey::from_letters(w.letters())
    }

    pub fn to_word(&self) -> Word {
        match self {
            WordKey::Packed(mut bits) => {
                let mut letters = Vec::new();
                while bits != 0 {
                    letters.push(Letter::from_code((bits & 0xf) as u8));
                    bits >>= 4;
                }
                Word::new(letters)
            }
            WordKey::Heap(raw) => Word::new(raw.iter().map(|&r| Letter::from_raw(r))),
        }
    }

    pub fn len(&self) -> usize {
        match self {
            WordKey::Packed(bits) => ((128 - bits.leading_zeros() as usize) + 3) / 4,
            WordKey::Heap(raw) => raw.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, WordKey::Packed(0)) || self.len() == 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::random_word;

    #[test]
    fn roundtrip() {
        for seed in 0..50 {
            for len in [0usize, 1, 5, 15, 31] {
                let w = random_word(2, len, seed);
                let k = WordKey::from_word(&w);
                assert_eq!(k.to_word(), w);
                assert_eq!(k.len(), w.len());
            }
        }
    }

    #[test]
    fn long_words_go_heap() {
        let w = random_word(2, 40, 1);
        assert!(matches!(WordKey::from_word(&w), WordKey::Heap(_)));
        assert_eq!(WordKey::from_word(&w).to_word(), w);
    }

    #[test]
    fn distinct_words_distinct_keys() {
        let a = Word::parse("a1 b1").unwrap();
        let b = Word::parse("a1 B1").unwrap();
        assert_ne!(WordKey::from_word(&a), WordKey::from_word(&b));
    }
}
