//! Generator letters for the standard genus-g presentation.
//!
//! The alphabet for genus g has 2g generators indexed 1..=2g (odd indices are
//! the a-handles, even indices the b-handles) plus their inverses. A letter is
//! stored as a nonzero `i8`: `+k` for generator k, `-k` for its inverse. Text
//! form is `a1 b1 a2 b2 ...` with uppercase denoting inverses (`A1` = a1⁻¹).

use std::fmt;

use serde::{Deserialize, Serialize};

/// Largest supported generator index (2g). Keeps letters packable in 4 bits
/// plus sign, which the ball table and search keys rely on.
pub const MAX_GENERATOR_INDEX: u8 = 14;

/// One generator or inverse-generator letter.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Letter(i8);

impl Letter {
    /// Letter for generator `index` (1-based, 1..=2g) with `positive` sign.
    pub fn new(index: u8, positive: bool) -> Letter {
        assert!(
            index >= 1 && index <= MAX_GENERATOR_INDEX,
            "generator index {index} out of range"
        );
        Letter(if positive { index as i8 } else { -(index as i8) })
    }

    pub fn from_raw(raw: i8) -> Letter {
        assert!(raw != 0 && raw.unsigned_abs() <= MAX_GENERATOR_INDEX);
        Letter(raw)
    }

    pub fn raw(self) -> i8 {
        self.0
    }

    /// 1-based generator index, ignoring sign.
    pub fn index(self) -> u8 {
        self.0.unsigned_abs()
    }

    pub fn is_positive(self) -> bool {
        self.0 > 0
    }

    pub fn inverse(self) -> Letter {
        Letter(-self.0)
    }

    /// Packed nibble code in 1..=2*2g: positive k -> 2k-1, negative k -> 2k.
    /// Also serves as the shortlex rank (a1 < A1 < b1 < B1 < a2 < ...).
    pub fn code(self) -> u8 {
        let idx = self.index();
        if self.is_positive() {
            2 * idx - 1
        } else {
            2 * idx
        }
    }

    pub fn from_code(code: u8) -> Letter {
        debug_assert!(code >= 1);
        let idx = code.div_ceil(2);
        Letter::new(idx, code % 2 == 1)
    }

    /// All 4g letters of the genus-g alphabet in shortlex order.
    pub fn alphabet(genus: u8) -> Vec<Letter> {
        let n = 2 * genus;
        (1..=n)
            .flat_map(|i| [Letter::new(i, true), Letter::new(i, false)])
            .collect()
    }

    /// Parse one token of the text syntax, e.g. "a1", "B2".
    pub fn parse(token: &str) -> Result<Letter, LetterParseError> {
        let mut chars = token.chars();
        let head = chars.next().ok_or_else(|| LetterParseError::bad(token))?;
        let (family, positive) = match head {
            'a' => ('a', true),
            'A' => ('a', false),
            'b' => ('b', true),
            'B' => ('b', false),
            _ => return Err(LetterParseError::bad(token)),
        };
        let num: u8 = chars
            .as_str()
            .parse()
            .map_err(|_| LetterParseError::bad(token))?;
        if num == 0 {
            return Err(LetterParseError::bad(token));
        }
        // a_i -> index 2i-1, b_i -> index 2i
        let index = match family {
            'a' => 2 * num - 1,
            _ => 2 * num,
        };
        if index > MAX_GENERATOR_INDEX {
            return Err(LetterParseError::bad(token));
        }
        Ok(Letter::new(index, positive))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx = self.index();
        let (family, num) = if idx % 2 == 1 {
            ('a', idx.div_ceil(2))
        } else {
            ('b', idx / 2)
        };
        let c = if self.is_positive() {
            family
        } else {
            family.to_ascii_uppercase()
        };
        write!(f, "{c}{num}")
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Letter) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Letter {
    fn cmp(&self, other: &Letter) -> std::cmp::Ordering {
        self.code().cmp(&other.code())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse generator token {token:?} (expected e.g. a1, b1, A1, B2)")]
pub struct LetterParseError {
    pub token: String,
}

impl LetterParseError {
    fn bad(token: &str) -> LetterParseError {
        LetterParseError {
            token: token.to_string(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_text() {
        for g in [2u8, 3] {
            for l in Letter::alphabet(g) {
                assert_eq!(Letter::parse(&l.to_string()).unwrap(), l);
            }
        }
    }

    #[test]
    fn shortlex_order() {
        let alpha = Letter::alphabet(2);
        let shown: Vec<String> = alpha.iter().map(|l| l.to_string()).collect();
        assert_eq!(shown, ["a1", "A1", "b1", "B1", "a2", "A2", "b2", "B2"]);
        assert!(alpha.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn rejects_garbage() {
        for bad in ["c3", "a0", "a", "", "ab", "a1x"] {
            assert!(Letter::parse(bad).is_err(), "{bad} should not parse");
        }
    }

    #[test]
    fn code_roundtrip() {
        for l in Letter::alphabet(7) {
            assert_eq!(Letter::from_code(l.code()), l);
        }
    }
}
