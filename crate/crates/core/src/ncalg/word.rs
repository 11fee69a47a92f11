use std::cmp::Ordering;
use std::fmt;

use crate::cocycle::KleinElement;

/// A monomial in the free algebra on four generators.
///
/// Ordered degree-lexicographically with `x0 < x1 < x2 < x3`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn new(letters: impl Into<Vec<u8>>) -> Self {
        let letters = letters.into();
        debug_assert!(
            letters.iter().all(|&l| l < 4),
            "generator index out of range"
        );
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(g: usize) -> Self {
        Word(vec![g as u8])
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn push(&mut self, g: usize) {
        self.0.push(g as u8);
    }

    /// Splits off the last letter.
    pub fn split_last(&self) -> Option<(Word, usize)> {
        let (&last, rest) = self.0.split_last()?;
        Some((Word(rest.to_vec()), last as usize))
    }

    /// G-degree under a grading of the generators.
    pub fn g_degree(&self, grading: &[KleinElement; 4]) -> KleinElement {
        self.0
            .iter()
            .fold(KleinElement::E, |acc, &l| acc * grading[l as usize])
    }

    /// Index of the word among all words of its length, reading letters as
    /// base-4 digits.
    pub fn rank_index(&self) -> usize {
        self.0.iter().fold(0usize, |acc, &l| acc * 4 + l as usize)
    }

    pub fn from_rank_index(mut idx: usize, len: usize) -> Word {
        let mut v = vec![0u8; len];
        for slot in v.iter_mut().rev() {
            *slot = (idx % 4) as u8;
            idx /= 4;
        }
        Word(v)
    }

    /// Every word of length `n`, in increasing order.
    pub fn all_of_length(n: usize) -> impl Iterator<Item = Word> {
        (0..4usize.pow(n as u32)).map(move |i| Word::from_rank_index(i, n))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for l in &self.0 {
            write!(f, "x{l}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deglex_order() {
        let a = Word::new(vec![3]);
        let b = Word::new(vec![0, 0]);
        assert!(a < b);
        assert!(Word::new(vec![0, 1]) < Word::new(vec![1, 0]));
        assert!(Word::empty() < a);
    }

    #[test]
    fn rank_index_round_trip() {
        for (i, w) in Word::all_of_length(3).enumerate() {
            assert_eq!(w.rank_index(), i);
        }
        assert_eq!(Word::from_rank_index(6, 2), Word::new(vec![1, 2]));
    }

    #[test]
    fn g_degree_is_product() {
        use crate::cocycle::standard_grading;
        let g = standard_grading();
        assert_eq!(Word::new(vec![1, 2]).g_degree(&g), KleinElement::G1G2);
        assert_eq!(Word::new(vec![3, 3]).g_degree(&g), KleinElement::E);
    }
}
