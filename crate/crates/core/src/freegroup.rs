//! Reduced-word calculus in free groups.
//!
//! Words are freely reduced lists of signed generators. Besides the basic
//! group operations the module provides commutator powers, abelianization
//! (the kernel test for the commutator subgroup), and an exhaustive
//! single-commutator decomposition search over cyclic words of the form
//! `A·B·C·A⁻¹·B⁻¹·C⁻¹`, which witnesses whether a word is a commutator.
//!
//! Generators are indexed from 1; pretty-printing maps `1 → a`, `2 → b`,
//! with capitals denoting inverses.

use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WordError {
    #[error("invalid word literal `{0}`: letters must be ascii a-z or A-Z")]
    BadLiteral(String),
    #[error("word uses generator {found} but only {rank} generators are available")]
    RankTooSmall { found: u32, rank: u32 },
}

/// A letter `g^{±1}`: generator index (1-based) and exponent sign.
pub type Letter = (u32, i8);

fn inverse_letter(l: Letter) -> Letter {
    (l.0, -l.1)
}

/// A freely reduced word.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn empty() -> Self {
        Word::default()
    }

    pub fn generator(g: u32) -> Self {
        assert!(g >= 1);
        Word {
            letters: vec![(g, 1)],
        }
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
            letters: self
                .letters
                .iter()
                .rev()
                .map(|&l| inverse_letter(l))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        for &l in &other.letters {
            push_reduced(&mut letters, l);
        }
        Word { letters }
    }

    pub fn pow(&self, n: u32) -> Word {
        let mut acc = Word::empty();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Largest generator index used; 0 for the empty word.
    pub fn max_generator(&self) -> u32 {
        self.letters.iter().map(|&(g, _)| g).max().unwrap_or(0)
    }

    /// Strips matching inverse ends: returns `(u, core)` with
    /// `self = u · core · u⁻¹` and `core` cyclically reduced.
    pub fn cyclic_reduce(&self) -> (Word, Word) {
        let mut letters = self.letters.clone();
        let mut conjugator = Vec::new();
        while letters.len() >= 2 {
            let first = letters[0];
            let last = *letters.last().unwrap();
            if inverse_letter(first) == last {
                conjugator.push(first);
                letters.remove(0);
                letters.pop();
            } else {
                break;
            }
        }
        (Word { letters: conjugator }, Word { letters })
    }
}

fn push_reduced(stack: &mut Vec<Letter>, l: Letter) {
    if let Some(&top) = stack.last() {
        if inverse_letter(top) == l {
            stack.pop();
            return;
        }
    }
    stack.push(l);
}

/// Free reduction of an arbitrary letter list; confluent stack reducer.
pub fn reduce(letters: &[Letter]) -> Word {
    let mut stack = Vec::with_capacity(letters.len());
    for &l in letters {
        assert!(l.1 == 1 || l.1 == -1, "letter signs must be ±1");
        assert!(l.0 >= 1, "generator indices are 1-based");
        push_reduced(&mut stack, l);
    }
    Word { letters: stack }
}

/// `[x, y] = x y x⁻¹ y⁻¹`, reduced.
pub fn commutator(x: &Word, y: &Word) -> Word {
    x.mul(y).mul(&x.inverse()).mul(&y.inverse())
}

/// Reduced form of `(x y x⁻¹ y⁻¹)ⁿ`.
pub fn commutator_power(x: &Word, y: &Word, n: u32) -> Word {
    commutator(x, y).pow(n)
}

/// Exponent-sum vector indexed by generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianImage {
    pub sums: Vec<i64>,
}

impl AbelianImage {
    pub fn is_zero(&self) -> bool {
        self.sums.iter().all(|&s| s == 0)
    }

    pub fn add(&self, other: &AbelianImage) -> AbelianImage {
        assert_eq!(self.sums.len(), other.sums.len());
        AbelianImage {
            sums: self
                .sums
                .iter()
                .zip(&other.sums)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

/// Image in the free abelianization of rank `rank`; zero iff the word lies
/// in the commutator subgroup.
pub fn abelianize(w: &Word, rank: u32) -> Result<AbelianImage, WordError> {
    let mut sums = vec![0i64; rank as usize];
    for &(g, s) in w.letters() {
        if g > rank {
            return Err(WordError::RankTooSmall { found: g, rank });
        }
        sums[(g - 1) as usize] += s as i64;
    }
    Ok(AbelianImage { sums })
}

/// Witness that `w` is a single commutator: a cyclic decomposition
/// `A·B·C·A⁻¹·B⁻¹·C⁻¹` together with the reconstructed pair `(x, y)`
/// satisfying `[x, y] = w` exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommutatorWitness {
    pub part_a: Word,
    pub part_b: Word,
    pub part_c: Word,
    pub x: Word,
    pub y: Word,
}

/// Exhaustive Wicks-form search: a cyclically reduced word is a commutator
/// iff some rotation reads `A·B·C·A⁻¹·B⁻¹·C⁻¹`. Nonzero abelianization
/// short-circuits to `None`.
pub fn single_commutator(w: &Word) -> Option<CommutatorWitness> {
    if w.is_empty() {
        return Some(CommutatorWitness {
            part_a: Word::empty(),
            part_b: Word::empty(),
            part_c: Word::empty(),
            x: Word::empty(),
            y: Word::empty(),
        });
    }
    let rank = w.max_generator();
    if !abelianize(w, rank).expect("rank covers the word").is_zero() {
        return None;
    }
    let (conj, core) = w.cyclic_reduce();
    let n = core.len();
    if n == 0 || n % 2 != 0 {
        return None;
    }
    let half = n / 2;
    let letters = core.letters();
    for rot in 0..n {
        let rotated: Vec<Letter> = (0..n).map(|i| letters[(rot + i) % n]).collect();
        for a_len in (0..=half).rev() {
            for b_len in (0..=(half - a_len)).rev() {
                let c_len = half - a_len - b_len;
                if matches_wicks(&rotated, a_len, b_len, c_len) {
                    let part_a = Word {
                        letters: rotated[0..a_len].to_vec(),
                    };
                    let part_b = Word {
                        letters: rotated[a_len..a_len + b_len].to_vec(),
                    };
                    let part_c = Word {
                        letters: rotated[a_len + b_len..half].to_vec(),
                    };
                    // [AB, CA⁻¹] = A·B·C·A⁻¹·B⁻¹·C⁻¹, conjugated back into w
                    let prefix = Word {
                        letters: letters[0..rot].to_vec(),
                    };
                    let outer = conj.mul(&prefix);
                    let x = outer.mul(&part_a.mul(&part_b)).mul(&outer.inverse());
                    let y = outer
                        .mul(&part_c.mul(&part_a.inverse()))
                        .mul(&outer.inverse());
                    debug_assert_eq!(commutator(&x, &y), *w);
                    return Some(CommutatorWitness {
                        part_a,
                        part_b,
                        part_c,
                        x,
                        y,
                    });
                }
            }
        }
    }
    None
}

fn matches_wicks(rotated: &[Letter], a_len: usize, b_len: usize, c_len: usize) -> bool {
    let half = a_len + b_len + c_len;
    let a = &rotated[0..a_len];
    let b = &rotated[a_len..a_len + b_len];
    let c = &rotated[a_len + b_len..half];
    let mut expected: Vec<Letter> = Vec::with_capacity(half);
    expected.extend(a.iter().rev().map(|&l| inverse_letter(l)));
    expected.extend(b.iter().rev().map(|&l| inverse_letter(l)));
    expected.extend(c.iter().rev().map(|&l| inverse_letter(l)));
    rotated[half..] == expected[..]
}

impl fmt::Display for Word {
    /// `1 → a/A, 2 → b/B, …`; the empty word prints as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for &(g, s) in &self.letters {
            let base = b'a' + ((g - 1) % 26) as u8;
            let ch = if s > 0 {
                base as char
            } else {
                base.to_ascii_uppercase() as char
            };
            write!(f, "{ch}")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = WordError;

    /// Parses strings over `a-z`/`A-Z` (capitals are inverses), e.g. `"abAB"`.
    fn from_str(text: &str) -> Result<Self, WordError> {
        if text == "1" {
            return Ok(Word::empty());
        }
        let mut letters = Vec::with_capacity(text.len());
        for ch in text.chars() {
            if ch.is_ascii_lowercase() {
                letters.push((ch as u32 - 'a' as u32 + 1, 1i8));
            } else if ch.is_ascii_uppercase() {
                letters.push((ch as u32 - 'A' as u32 + 1, -1i8));
            } else {
                return Err(WordError::BadLiteral(text.to_string()));
            }
        }
        Ok(reduce(&letters))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(text: &str) -> Word {
        text.parse().unwrap()
    }

    #[test]
    fn reduction() {
        assert_eq!(w("aA"), Word::empty());
        assert_eq!(w("abBa"), w("aa"));
        assert_eq!(w("abAB").len(), 4);
    }

    #[test]
    fn naive_reducer_agreement() {
        // independent oracle: repeatedly delete the first cancelling pair
        fn naive(mut letters: Vec<Letter>) -> Vec<Letter> {
            loop {
                let mut cancelled = false;
                for i in 0..letters.len().saturating_sub(1) {
                    if letters[i].0 == letters[i + 1].0 && letters[i].1 == -letters[i + 1].1 {
                        letters.drain(i..=i + 1);
                        cancelled = true;
                        break;
                    }
                }
                if !cancelled {
                    return letters;
                }
            }
        }
        let mut state = 0x2545F4914F6CDD1Du64;
        for _ in 0..2000 {
            let mut letters = Vec::new();
            for _ in 0..24 {
                state = state
                    .wrapping_mul(6364136223846793005)
                    .wrapping_add(1442695040888963407);
                let g = ((state >> 33) % 3 + 1) as u32;
                let s = if (state >> 7) & 1 == 0 { 1i8 } else { -1i8 };
                letters.push((g, s));
            }
            assert_eq!(reduce(&letters).letters(), naive(letters.clone()));
            // idempotence
            let once = reduce(&letters);
            assert_eq!(reduce(once.letters()), once);
        }
    }

    #[test]
    fn commutator_powers() {
        let a = Word::generator(1);
        let b = Word::generator(2);
        assert_eq!(commutator_power(&a, &b, 1), w("abAB"));
        assert_eq!(commutator_power(&a, &b, 0), Word::empty());
        assert_eq!(commutator_power(&a, &a, 5), Word::empty());
        assert_eq!(commutator_power(&a, &b, 2), w("abABabAB"));
    }

    #[test]
    fn abelianization() {
        assert!(abelianize(&w("abAB"), 2).unwrap().is_zero());
        assert_eq!(abelianize(&w("aab"), 2).unwrap().sums, vec![2, 1]);
        let a = Word::generator(1);
        let b = Word::generator(2);
        assert!(abelianize(&commutator_power(&a, &b, 6), 2)
            .unwrap()
            .is_zero());
        assert!(matches!(
            abelianize(&w("abc"), 2),
            Err(WordError::RankTooSmall { found: 3, rank: 2 })
        ));
    }

    #[test]
    fn single_commutator_positive() {
        let witness = single_commutator(&w("abAB")).expect("is a commutator");
        assert_eq!(witness.part_a, w("a"));
        assert_eq!(witness.part_b, w("b"));
        assert_eq!(witness.part_c, Word::empty());
        assert_eq!(commutator(&witness.x, &witness.y), w("abAB"));
    }

    #[test]
    fn single_commutator_negative() {
        // (abAB)^2 needs two commutators
        assert_eq!(single_commutator(&w("abABabAB")), None);
        // nonzero abelianization short-circuits
        assert_eq!(single_commutator(&w("aab")), None);
    }

    #[test]
    fn single_commutator_conjugated() {
        // a conjugate of a commutator is a commutator; witness must verify
        let inner = w("abAB");
        let conj = w("ba").mul(&inner).mul(&w("ba").inverse());
        let witness = single_commutator(&conj).expect("conjugate of a commutator");
        assert_eq!(commutator(&witness.x, &witness.y), conj);
    }

    #[test]
    fn cyclic_reduction() {
        let (u, core) = w("aabABA").cyclic_reduce();
        assert_eq!(u, w("a"));
        assert_eq!(core, w("abAB"));
        assert_eq!(u.mul(&core).mul(&u.inverse()), w("aabABA"));
    }

    #[test]
    fn display_round_trip() {
        for text in ["abAB", "aa", "bA", "1"] {
            assert_eq!(w(text).to_string(), text);
        }
    }
}
