//! Exact balls in the Cayley graph.
//!
//! Elements are identified by their shortlex normal form. The BFS works level
//! by level: every level-n element extended by every non-cancelling letter is
//! normalized, landing either back on level n-1 (a relation shortened it) or
//! on level n+1. Candidate sets are merged, sorted and deduplicated before
//! ids are assigned, so the table is identical across traversal orders and
//! thread schedules. Adjacency is filled in a second pass, one row per
//! element.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::letters::Letter;
use crate::key::WordKey;
use crate::presentation::SurfacePresentation;
use crate::word::Word;

/// Hard cap on enumerable radius; resource limits usually bite first.
pub const MAX_BALL_RADIUS: usize = 8;

pub const NO_NEIGHBOR: u32 = u32::MAX;

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct EnumLimits {
    pub max_elements: usize,
    pub max_bytes: usize,
}

impl Default for EnumLimits {
    fn default() -> EnumLimits {
        EnumLimits {
            max_elements: 20_000_000,
            max_bytes: 3_000_000_000,
        }
    }
}

#[derive(Debug, Clone, thiserror::Error)]
pub enum GroupError {
    #[error("radius {requested} exceeds the enumeration cap {max}")]
    RadiusCap { requested: usize, max: usize },
    #[error("{what} limit exceeded while enumerating: limit {limit}, needed at least {needed}")]
    ResourceLimit {
        what: &'static str,
        limit: usize,
        needed: usize,
    },
    #[error("element lies outside the ball: word length {required} exceeds radius {radius}")]
    OutOfBall { required: usize, radius: usize },
}

/// Ball of given radius: canonical words, exact lengths, adjacency under
/// right multiplication by each alphabet letter (shortlex letter order).
pub struct BallTable {
    presentation: SurfacePresentation,
    radius: usize,
    words: Vec<WordKey>,
    index: HashMap<WordKey, u32>,
    /// id * 4g + letter_rank -> neighbor id or NO_NEIGHBOR.
    adjacency: Vec<u32>,
    /// First id of each level; level_offsets[r+1] is one past level r.
    level_offsets: Vec<usize>,
}

impl BallTable {
    pub fn presentation(&self) -> &SurfacePresentation {
        &self.presentation
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn word_of(&self, id: u32) -> Word {
        self.words[id as usize].to_word()
    }

    pub fn key_of(&self, id: u32) -> &WordKey {
        &self.words[id as usize]
    }

    pub fn length_of(&self, id: u32) -> usize {
        self.words[id as usize].len()
    }

    pub fn id_of_key(&self, key: &WordKey) -> Option<u32> {
        self.index.get(key).copied()
    }

    /// Id of the element of w (any word), if it lies in the ball.
    pub fn id_of(&self, w: &Word) -> Option<u32> {
        self.id_of_key(&WordKey::from_word(&self.presentation.canonical(w)))
    }

    pub fn ids_at_level(&self, level: usize) -> std::ops::Range<u32> {
        let lo = self.level_offsets[level] as u32;
        let hi = self.level_offsets[level + 1] as u32;
        lo..hi
    }

    pub fn level_count(&self, level: usize) -> usize {
        self.level_offsets[level + 1] - self.level_offsets[level]
    }

    pub fn ball_count(&self, radius: usize) -> usize {
        self.level_offsets[radius + 1]
    }

    pub fn alphabet(&self) -> Vec<Letter> {
        self.presentation.alphabet()
    }

    pub fn neighbor(&self, id: u32, letter_rank: usize) -> Option<u32> {
        let n = self.presentation.alphabet().len();
        let v = self.adjacency[id as usize * n + letter_rank];
        (v != NO_NEIGHBOR).then_some(v)
    }

    pub fn neighbors(&self, id: u32) -> &[u32] {
        let n = 4 * self.presentation.genus() as usize;
        &self.adjacency[id as usize * n..(id as usize + 1) * n]
    }

    /// Exact geodesic word length; error names the radius a caller would
    /// need to cover this element.
    pub fn word_length(&self, w: &Word) -> Result<usize, GroupError> {
        let canon = self.presentation.canonical(w);
        if canon.len() > self.radius {
            return Err(GroupError::OutOfBall {
                required: canon.len(),
                radius: self.radius,
            });
        }
        debug_assert!(self.index.contains_key(&WordKey::from_word(&canon)));
        Ok(canon.len())
    }

    /// Bounded conjugacy search: some g in the ball with g u g⁻¹ = v, or None
    /// ("not found within radius" — explicitly not a proof of non-conjugacy).
    pub fn find_conjugator(&self, u: &Word, v: &Word) -> Option<Word> {
        let cu = self.presentation.canonical(u);
        let cv = self.presentation.canonical(v);
        if cu.len() % 2 != cv.len() % 2 {
            return None;
        }
        let target = WordKey::from_word(&cv);
        for id in 0..self.len() as u32 {
            let g = self.word_of(id);
            let conj = self.presentation.canonical(&cu.conjugate_by(&g));
            if WordKey::from_word(&conj) == target {
                return Some(g);
            }
        }
        None
    }
}

/// Breadth-first enumeration of the ball of the given radius.
pub fn enumerate_ball(
    presentation: &SurfacePresentation,
    radius: usize,
    limits: EnumLimits,
) -> Result<BallTable, GroupError> {
    enumerate_ball_ordered(presentation, radius, limits, false)
}

/// Same table, but parents are processed in reverse inside each level; used
/// to check traversal-order independence.
pub fn enumerate_ball_ordered(
    presentation: &SurfacePresentation,
    radius: usize,
    limits: EnumLimits,
    reverse_order: bool,
) -> Result<BallTable, GroupError> {
    if radius > MAX_BALL_RADIUS {
        return Err(GroupError::RadiusCap {
            requested: radius,
            max: MAX_BALL_RADIUS,
        });
    }
    let alphabet = presentation.alphabet();
    let n_letters = alphabet.len();

    let mut words: Vec<WordKey> = vec![WordKey::from_word(&Word::empty())];
    let mut index: HashMap<WordKey, u32> = HashMap::new();
    index.insert(words[0].clone(), 0);
    let mut level_offsets = vec![0usize, 1];

    for level in 0..radius {
        let lo = level_offsets[level];
        let hi = level_offsets[level + 1];
        let mut parent_ids: Vec<usize> = (lo..hi).collect();
        if reverse_order {
            parent_ids.reverse();
        }

        // Candidates for level+1; normalization sends each extension either
        // down a level (already known) or up (collected here).
        let mut next: Vec<WordKey> = parent_ids
            .par_iter()
            .flat_map_iter(|&pid| {
                let parent = words[pid].to_word();
                let mut out: Vec<WordKey> = Vec::new();
                for &letter in &alphabet {
                    if parent.letters().last() == Some(&letter.inverse()) {
                        continue;
                    }
                    let child = presentation.canonical(&parent.concat(&Word::single(letter)));
                    debug_assert!(
                        child.len() == parent.len() + 1 || child.len() + 1 == parent.len(),
                        "normal form length must move by exactly one level"
                    );
                    if child.len() == parent.len() + 1 {
                        out.push(WordKey::from_word(&child));
                    }
                }
                out
            })
            .collect();

        next.par_sort_unstable_by(|a, b| a.to_word().shortlex_cmp(&b.to_word()));
        next.dedup();

        let new_total = words.len() + next.len();
        if new_total > limits.max_elements {
            return Err(GroupError::ResourceLimit {
                what: "max_elements",
                limit: limits.max_elements,
                needed: new_total,
            });
        }
        let bytes = estimated_bytes(new_total, n_letters);
        if bytes > limits.max_bytes {
            return Err(GroupError::ResourceLimit {
                what: "max_bytes",
                limit: limits.max_bytes,
                needed: bytes,
            });
        }

        for key in next {
            let id = words.len() as u32;
            let dup = index.insert(key.clone(), id);
            debug_assert!(dup.is_none());
            words.push(key);
        }
        level_offsets.push(words.len());
    }

    // Adjacency pass: one row per element, letters in shortlex rank order.
    let adjacency: Vec<u32> = (0..words.len())
        .into_par_iter()
        .flat_map_iter(|id| {
            let w = words[id].to_word();
            let mut row = vec![NO_NEIGHBOR; n_letters];
            for (rank, &letter) in alphabet.iter().enumerate() {
                let neighbor = presentation.canonical(&w.concat(&Word::single(letter)));
                if neighbor.len() <= radius {
                    let nid = index
                        .get(&WordKey::from_word(&neighbor))
                        .expect("neighbor inside radius must be enumerated");
                    row[rank] = *nid;
                }
            }
            row
        })
        .collect();

    Ok(BallTable {
        presentation: presentation.clone(),
        radius,
        words,
        index,
        adjacency,
        level_offsets,
    })
}

fn estimated_bytes(elements: usize, n_letters: usize) -> usize {
    // key + hash entry + adjacency row, roughly
    elements * (32 + 48 + 4 * n_letters)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ball(radius: usize) -> BallTable {
        let pres = SurfacePresentation::new(2);
        enumerate_ball(&pres, radius, EnumLimits::default()).unwrap()
    }

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn small_ball_counts() {
        let b = ball(3);
        assert_eq!(b.ball_count(0), 1);
        assert_eq!(b.ball_count(1), 9);
        assert_eq!(b.ball_count(2), 65);
        assert_eq!(b.ball_count(3), 457);
    }

    #[test]
    fn radius_four_sees_the_relation() {
        let b = ball(4);
        assert!(b.ball_count(4) < 3201, "got {}", b.ball_count(4));
        // the two relator halves name the same element
        assert_eq!(b.id_of(&w("a1 b1 A1 B1")), b.id_of(&w("b2 a2 B2 A2")));
    }

    #[test]
    fn word_length_examples() {
        let b = ball(4);
        assert_eq!(b.word_length(&Word::empty()).unwrap(), 0);
        assert_eq!(b.word_length(&w("a1 b1 A1 B1")).unwrap(), 4);
        let pres = SurfacePresentation::new(2);
        assert_eq!(b.word_length(pres.relator()).unwrap(), 0);
        match b.word_length(&w("a1 b1 a1 b1 a1 b1")) {
            Err(GroupError::OutOfBall { required, radius }) => {
                assert_eq!(required, 6);
                assert_eq!(radius, 4);
            }
            other => panic!("expected out-of-ball, got {other:?}"),
        }
    }

    #[test]
    fn inversion_closed() {
        let b = ball(3);
        for id in 0..b.len() as u32 {
            let inv = b.word_of(id).inverse();
            let iid = b.id_of(&inv).expect("inverse in ball");
            assert_eq!(b.length_of(iid), b.length_of(id));
        }
    }

    #[test]
    fn adjacency_is_symmetric_and_triangle() {
        let b = ball(3);
        let alpha = b.alphabet();
        for id in 0..b.len() as u32 {
            for (rank, &letter) in alpha.iter().enumerate() {
                if let Some(nid) = b.neighbor(id, rank) {
                    let back = alpha
                        .iter()
                        .position(|&l| l == letter.inverse())
                        .unwrap();
                    assert_eq!(b.neighbor(nid, back), Some(id));
                    let d1 = b.length_of(id) as i64;
                    let d2 = b.length_of(nid) as i64;
                    assert_eq!((d1 - d2).abs(), 1, "adjacent lengths differ by one");
                }
            }
        }
    }

    #[test]
    fn traversal_order_independent() {
        let pres = SurfacePresentation::new(2);
        let fwd = enumerate_ball_ordered(&pres, 4, EnumLimits::default(), false).unwrap();
        let rev = enumerate_ball_ordered(&pres, 4, EnumLimits::default(), true).unwrap();
        assert_eq!(fwd.len(), rev.len());
        for id in 0..fwd.len() as u32 {
            assert_eq!(fwd.word_of(id), rev.word_of(id));
        }
        assert_eq!(fwd.adjacency, rev.adjacency);
    }

    #[test]
    fn conjugator_search() {
        let b = ball(3);
        let g = b
            .find_conjugator(&w("a1"), &w("b1 a1 B1"))
            .expect("conjugate by b1");
        let pres = SurfacePresentation::new(2);
        assert!(pres.words_equal(&w("a1").conjugate_by(&g), &w("b1 a1 B1")));
        assert_eq!(b.find_conjugator(&w("a1"), &w("a1")), Some(Word::empty()));
        assert_eq!(b.find_conjugator(&w("a1"), &w("a2")), None);
    }

    #[test]
    fn resource_caps_fail_loudly() {
        let pres = SurfacePresentation::new(2);
        let tiny = EnumLimits {
            max_elements: 50,
            max_bytes: usize::MAX,
        };
        match enumerate_ball(&pres, 3, tiny) {
            Err(GroupError::ResourceLimit { what, .. }) => assert_eq!(what, "max_elements"),
            other => panic!("expected resource error, got {:?}", other.map(|b| b.len())),
        }
        match enumerate_ball(&pres, MAX_BALL_RADIUS + 1, EnumLimits::default()) {
            Err(GroupError::RadiusCap { .. }) => {}
            other => panic!("expected radius cap, got {:?}", other.map(|b| b.len())),
        }
    }
}
