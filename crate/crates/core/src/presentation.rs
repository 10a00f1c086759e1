//! The one-relator surface presentation and its rewriting machinery.
//!
//! For genus g the relator is [a1,b1]...[ag,bg], length 4g. Every ordered
//! 2-gram of the symmetrized relator (all rotations of r and r⁻¹) occurs at
//! exactly one cyclic position, so a match of length ≥ 2 pins down the cyclic
//! word and offset and extends greedily. That gives O(n) detection of
//! relator runs, which drives both Dehn shortening (runs longer than half the
//! relator) and the length-preserving half-swaps used to reach the shortlex
//! normal form.

use std::collections::{HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::letters::Letter;
use crate::word::Word;

#[derive(Clone, Serialize, Deserialize)]
pub struct SurfacePresentation {
    genus: u8,
    relator: Word,
    relator_cyclings: Vec<Word>,
    /// 2-gram table: [code1][code2] -> (cyclic word id, offset) or NONE.
    #[serde(skip)]
    gram: Vec<Vec<Option<(u8, u16)>>>,
    /// The two cyclic words (relator, inverse relator) as letter arrays.
    #[serde(skip)]
    cyclic: Vec<Vec<Letter>>,
}

impl std::fmt::Debug for SurfacePresentation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SurfacePresentation")
            .field("genus", &self.genus)
            .field("relator", &self.relator)
            .finish()
    }
}

impl SurfacePresentation {
    pub fn new(genus: u8) -> SurfacePresentation {
        assert!(genus >= 2, "surface presentation needs genus >= 2");
        assert!(2 * genus <= crate::letters::MAX_GENERATOR_INDEX);
        let mut letters = Vec::with_capacity(4 * genus as usize);
        for i in 1..=genus {
            let a = Letter::new(2 * i - 1, true);
            let b = Letter::new(2 * i, true);
            letters.extend([a, b, a.inverse(), b.inverse()]);
        }
        let relator = Word::new(letters.clone());
        debug_assert_eq!(relator.len(), 4 * genus as usize);

        let cyclic = vec![
            letters.clone(),
            Word::new(letters).inverse().letters().to_vec(),
        ];
        let n = 4 * genus as usize;
        let mut relator_cyclings = Vec::with_capacity(2 * n);
        for c in &cyclic {
            for r in 0..n {
                let rot: Vec<Letter> = c.iter().cycle().skip(r).take(n).copied().collect();
                relator_cyclings.push(Word::new(rot));
            }
        }
        debug_assert!(relator_cyclings.iter().all(|w| w.len() == n));

        let codes = 4 * genus as usize + 1;
        let mut gram = vec![vec![None; codes]; codes];
        for (which, c) in cyclic.iter().enumerate() {
            for o in 0..n {
                let x = c[o].code() as usize;
                let y = c[(o + 1) % n].code() as usize;
                debug_assert!(gram[x][y].is_none(), "2-gram must locate uniquely");
                gram[x][y] = Some((which as u8, o as u16));
            }
        }

        SurfacePresentation {
            genus,
            relator,
            relator_cyclings,
            gram,
            cyclic,
        }
    }

    pub fn genus(&self) -> u8 {
        self.genus
    }

    pub fn relator(&self) -> &Word {
        &self.relator
    }

    pub fn relator_cyclings(&self) -> &[Word] {
        &self.relator_cyclings
    }

    pub fn alphabet(&self) -> Vec<Letter> {
        Letter::alphabet(self.genus)
    }

    fn relator_len(&self) -> usize {
        4 * self.genus as usize
    }

    fn cyclic_letter(&self, which: u8, pos: usize) -> Letter {
        let c = &self.cyclic[which as usize];
        c[pos % c.len()]
    }

    /// Maximal relator run starting at position i of w: Some((which, offset,
    /// run length ≥ 2)) when the 2-gram at i sits inside a relator cycling.
    fn run_at(&self, w: &[Letter], i: usize) -> Option<(u8, u16, usize)> {
        if i + 1 >= w.len() {
            return None;
        }
        let (which, off) = self.gram[w[i].code() as usize][w[i + 1].code() as usize]?;
        let mut m = 2usize;
        let max = self.relator_len().min(w.len() - i);
        while m < max && w[i + m] == self.cyclic_letter(which, off as usize + m) {
            m += 1;
        }
        Some((which, off, m))
    }

    /// Replace w[i..i+m) (a run matching a cycling at `off`) by the inverse of
    /// the complementary arc, then freely reduce.
    fn replace_run(&self, w: &[Letter], i: usize, which: u8, off: u16, m: usize) -> Word {
        let n = self.relator_len();
        debug_assert!(m >= 2 && m <= n);
        let mut letters: Vec<Letter> = Vec::with_capacity(w.len() + n - 2 * m);
        letters.extend_from_slice(&w[..i]);
        // complement arc runs from off+m to off+n; its inverse replaces the run
        for k in (m..n).rev() {
            letters.push(self.cyclic_letter(which, off as usize + k).inverse());
        }
        letters.extend_from_slice(&w[i + m..]);
        Word::new(letters)
    }

    /// One Dehn step: replace some run strictly longer than half the relator
    /// by its shorter complement. None if no such run exists.
    fn shorten_once(&self, w: &Word) -> Option<Word> {
        let half = self.relator_len() / 2;
        let ls = w.letters();
        for i in 0..ls.len() {
            if let Some((which, off, m)) = self.run_at(ls, i) {
                if m > half {
                    return Some(self.replace_run(ls, i, which, off, m));
                }
            }
        }
        None
    }

    /// Dehn's algorithm: freely reduce and replace any more-than-half relator
    /// subword with the shorter complement, to a fixpoint. Returns the empty
    /// word iff the input is the identity of the group.
    pub fn dehn_reduce(&self, w: &Word) -> Word {
        let mut w = w.clone();
        while let Some(shorter) = self.shorten_once(&w) {
            w = shorter;
        }
        w
    }

    pub fn is_identity(&self, w: &Word) -> bool {
        self.dehn_reduce(w).is_empty()
    }

    pub fn words_equal(&self, u: &Word, v: &Word) -> bool {
        self.is_identity(&u.concat(&v.inverse()))
    }

    /// Shortlex-least geodesic word of the element of w.
    ///
    /// Dehn steps shorten while possible; at each stuck length the closure
    /// under exactly-half swaps is explored breadth-first. Any swap that
    /// frees a cancellation or exposes a longer run descends to a shorter
    /// word; otherwise the closure is finite and its shortlex minimum is the
    /// normal form.
    pub fn canonical(&self, w: &Word) -> Word {
        let half = self.relator_len() / 2;
        let mut current = self.dehn_reduce(w);
        'outer: loop {
            if current.len() < 2 {
                return current;
            }
            let mut best = current.clone();
            let mut seen: HashSet<Word> = HashSet::new();
            seen.insert(current.clone());
            let mut queue: VecDeque<Word> = VecDeque::new();
            queue.push_back(current.clone());
            while let Some(v) = queue.pop_front() {
                let ls = v.letters();
                for i in 0..ls.len() {
                    let Some((which, off, m)) = self.run_at(ls, i) else {
                        continue;
                    };
                    if m < half {
                        continue;
                    }
                    let u = self.replace_run(ls, i, which, off, m);
                    if u.len() < v.len() {
                        current = self.dehn_reduce(&u);
                        continue 'outer;
                    }
                    debug_assert_eq!(u.len(), v.len());
                    if self.shorten_once(&u).is_some() {
                        current = self.dehn_reduce(&u);
                        continue 'outer;
                    }
                    if seen.insert(u.clone()) {
                        if u.shortlex_cmp(&best).is_lt() {
                            best = u.clone();
                        }
                        queue.push_back(u);
                    }
                }
            }
            return best;
        }
    }

    /// Exact word length of the element of w in the generators.
    pub fn geodesic_length(&self, w: &Word) -> usize {
        self.canonical(w).len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p() -> SurfacePresentation {
        SurfacePresentation::new(2)
    }

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn relator_shape() {
        let pres = p();
        assert_eq!(pres.relator(), &w("a1 b1 A1 B1 a2 b2 A2 B2"));
        assert_eq!(pres.relator_cyclings().len(), 16);
        for c in pres.relator_cyclings() {
            assert_eq!(c.len(), 8);
            // cyclically reduced: first and last not inverse
            let ls = c.letters();
            assert_ne!(ls[0], ls[7].inverse());
        }
    }

    #[test]
    fn relator_is_identity() {
        let pres = p();
        assert!(pres.dehn_reduce(pres.relator()).is_empty());
        let conj = pres.relator().conjugate_by(&w("b2 a1"));
        assert!(pres.is_identity(&conj));
        assert!(pres.is_identity(&pres.relator().pow(2)));
    }

    #[test]
    fn dehn_reduce_seven_letter_run() {
        let pres = p();
        // First seven letters of the relator equal the inverse of the eighth.
        let input = w("a1 b1 A1 B1 a2 b2 A2");
        let reduced = pres.dehn_reduce(&input);
        assert!(reduced.len() <= 4);
        assert!(pres.words_equal(&input, &reduced));
        assert_eq!(reduced, w("b2"));
    }

    #[test]
    fn dehn_reduce_no_op() {
        let pres = p();
        assert_eq!(pres.dehn_reduce(&w("a1 b1")), w("a1 b1"));
    }

    #[test]
    fn canonical_identifies_half_swap() {
        let pres = p();
        // The two halves of the relator give equal elements:
        // a1 b1 A1 B1 = (a2 b2 A2 B2)^{-1} = b2 a2 B2 A2
        let u = w("a1 b1 A1 B1");
        let v = w("b2 a2 B2 A2");
        assert!(pres.words_equal(&u, &v));
        assert_eq!(pres.canonical(&u), pres.canonical(&v));
        assert_eq!(pres.canonical(&u), u); // shortlex-least of the pair
    }

    #[test]
    fn canonical_is_stable_and_geodesic() {
        let pres = p();
        for seed in 0..40u64 {
            let x = crate::word::random_word(2, 6, seed);
            let c = pres.canonical(&x);
            assert!(pres.words_equal(&x, &c));
            assert_eq!(pres.canonical(&c), c);
            assert!(c.len() <= x.len());
        }
    }

    #[test]
    fn genus_three_relator() {
        let pres = SurfacePresentation::new(3);
        assert_eq!(pres.relator().len(), 12);
        assert!(pres.is_identity(pres.relator()));
    }
}
