//! Degree-by-degree construction of a graded quotient of the free algebra.
//!
//! Degree `n` of `T/I` is computed as `(A_{n-1} ⊗ V) / R_n`, where `R_n` is
//! spanned by `b·r` for normal words `b` of degree `n - deg r`. Each product
//! is pushed through the right-multiplication maps already built in lower
//! degrees, so the matrices stay of size `dim A_{n-1} * 4` instead of `4^n`.
//!
//! Columns are ordered with the largest word first, so after elimination
//! the surviving (non-pivot) words are the smallest in degree-lexicographic
//! order. Those are the normal words of degree `n`.

use std::collections::{BTreeMap, HashMap};

use super::{AlgebraError, Word};
use crate::field::{FieldError, Rational, TowerScalar};
use crate::linalg::{axpy, Echelon, Field, SparseVec};

/// A field the engine can run over, convertible to and from tower scalars.
pub trait Coefficient: Field {
    fn from_tower(t: &TowerScalar) -> Option<Self>;
    fn to_tower(&self) -> TowerScalar;
}

impl Coefficient for Rational {
    fn from_tower(t: &TowerScalar) -> Option<Self> {
        t.as_rational()
    }
    fn to_tower(&self) -> TowerScalar {
        TowerScalar::from_rational(self.clone())
    }
}

impl Coefficient for TowerScalar {
    fn from_tower(t: &TowerScalar) -> Option<Self> {
        Some(t.clone())
    }
    fn to_tower(&self) -> TowerScalar {
        self.clone()
    }
}

/// Normal words and right-multiplication maps of `T/I` up to a fixed degree.
#[derive(Clone, Debug)]
pub struct GradedQuotient<F: Coefficient> {
    bound: usize,
    words: Vec<Vec<Word>>,
    index: Vec<HashMap<Word, usize>>,
    /// `right[n][g][b]` is `NF(b · x_g)` for the `b`-th normal word of degree `n`.
    right: Vec<[Vec<SparseVec<F>>; 4]>,
}

impl<F: Coefficient> GradedQuotient<F> {
    /// Builds degrees `0..=bound`. Relations must be homogeneous of positive
    /// degree with coefficients representable in `F`.
    pub fn build(
        relations: &[Vec<(Word, TowerScalar)>],
        bound: usize,
    ) -> Result<Self, AlgebraError> {
        let mut rels: Vec<(usize, Vec<(Word, F)>)> = Vec::with_capacity(relations.len());
        for r in relations {
            let deg = r.first().map(|(w, _)| w.len()).unwrap_or(0);
            if deg == 0 || r.iter().any(|(w, _)| w.len() != deg) {
                return Err(AlgebraError::Inhomogeneous("relation degree".into()));
            }
            let conv = r
                .iter()
                .map(|(w, c)| {
                    F::from_tower(c)
                        .map(|x| (w.clone(), x))
                        .ok_or(AlgebraError::Field(FieldError::MismatchedSpec))
                })
                .collect::<Result<Vec<_>, _>>()?;
            rels.push((deg, conv));
        }

        let mut q = GradedQuotient {
            bound,
            words: vec![vec![Word::empty()]],
            index: vec![HashMap::from([(Word::empty(), 0)])],
            right: Vec::with_capacity(bound),
        };
        for n in 1..=bound {
            q.extend(n, &rels)?;
        }
        Ok(q)
    }

    fn extend(&mut self, n: usize, rels: &[(usize, Vec<(Word, F)>)]) -> Result<(), FieldError> {
        let prev = self.words[n - 1].len();
        let ncols = prev * 4;
        let col = |b: usize, g: usize| ncols - 1 - (b * 4 + g);
        let mut ech = Echelon::new(ncols);
        for (deg, terms) in rels {
            if *deg > n {
                continue;
            }
            let start = n - deg;
            for b in 0..self.words[start].len() {
                let mut acc: BTreeMap<usize, F> = BTreeMap::new();
                for (w, c) in terms {
                    let (head, last) = w.split_last().expect("positive degree");
                    let v = self.apply(start, vec![(b, F::one())], head.letters());
                    for (bp, x) in v {
                        let entry = [(col(bp, last), x)];
                        axpy(&mut acc, c, &entry);
                    }
                }
                ech.insert(acc.into_iter().collect())?;
            }
        }
        ech.make_reduced();

        // surviving columns, listed by increasing word
        let mut words = Vec::with_capacity(ncols - ech.rank());
        let mut new_index_of_flat = vec![usize::MAX; ncols];
        for (flat, slot) in new_index_of_flat.iter_mut().enumerate() {
            if !ech.is_pivot(col(flat / 4, flat % 4)) {
                *slot = words.len();
                let mut w = self.words[n - 1][flat / 4].clone();
                w.push(flat % 4);
                words.push(w);
            }
        }
        let mut maps: [Vec<SparseVec<F>>; 4] = Default::default();
        for (g, map) in maps.iter_mut().enumerate() {
            map.reserve(prev);
            for b in 0..prev {
                let flat = b * 4 + g;
                let c = col(b, g);
                let image = match ech.pivot_row(c) {
                    None => vec![(new_index_of_flat[flat], F::one())],
                    Some(row) => {
                        let mut v: SparseVec<F> = row
                            .iter()
                            .filter(|(cc, _)| *cc != c)
                            .map(|(cc, x)| (new_index_of_flat[ncols - 1 - cc], x.neg()))
                            .collect();
                        v.sort_by_key(|(i, _)| *i);
                        v
                    }
                };
                map.push(image);
            }
        }
        let index = words
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, w)| (w, i))
            .collect();
        self.words.push(words);
        self.index.push(index);
        self.right.push(maps);
        Ok(())
    }

    /// Right-multiplies a vector of degree `deg` by the letters of a word.
    fn apply(&self, deg: usize, mut v: SparseVec<F>, letters: &[u8]) -> SparseVec<F> {
        for (step, &g) in letters.iter().enumerate() {
            let map = &self.right[deg + step][g as usize];
            let mut acc: BTreeMap<usize, F> = BTreeMap::new();
            for (b, x) in &v {
                axpy(&mut acc, x, &map[*b]);
            }
            v = acc.into_iter().collect();
        }
        v
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn dimension(&self, n: usize) -> Option<usize> {
        self.words.get(n).map(Vec::len)
    }

    pub fn normal_words(&self, n: usize) -> Option<&[Word]> {
        self.words.get(n).map(Vec::as_slice)
    }

    pub fn word_index(&self, w: &Word) -> Option<usize> {
        self.index.get(w.len())?.get(w).copied()
    }

    /// Coordinates of a word in the normal-word basis of its degree.
    pub fn normal_form_word(&self, w: &Word) -> Option<SparseVec<F>> {
        if w.len() > self.bound {
            return None;
        }
        Some(self.apply(0, vec![(0, F::one())], w.letters()))
    }

    /// `NF(b · w)` for a degree-`deg` coordinate vector `v`.
    pub fn multiply_right(&self, deg: usize, v: &[(usize, F)], w: &Word) -> Option<SparseVec<F>> {
        if deg + w.len() > self.bound {
            return None;
        }
        Some(self.apply(deg, v.to_vec(), w.letters()))
    }

    /// `NF(x_g · b)` for the `b`-th normal word of degree `deg`.
    pub fn left_multiply_basis(&self, g: usize, deg: usize, b: usize) -> Option<SparseVec<F>> {
        if deg + 1 > self.bound {
            return None;
        }
        let word = &self.words[deg][b];
        Some(self.apply(1, self.right[0][g][0].clone(), word.letters()))
    }

    /// `NF(b · x_g)` for the `b`-th normal word of degree `deg`.
    pub fn right_multiply_basis(&self, g: usize, deg: usize, b: usize) -> Option<&SparseVec<F>> {
        self.right.get(deg).map(|m| &m[g][b])
    }
}

/// `4^n - rank{u r w}` computed directly in the free algebra. Independent
/// of [`GradedQuotient`]; used as a cross-check in low degree.
pub fn free_span_dimension<F: Coefficient>(
    relations: &[Vec<(Word, TowerScalar)>],
    n: usize,
) -> Result<usize, AlgebraError> {
    let ncols = 4usize.pow(n as u32);
    let mut ech: Echelon<F> = Echelon::new(ncols);
    for (row, _) in free_products(relations, n)? {
        ech.insert(row)?;
    }
    Ok(ncols - ech.rank())
}

/// A product row with its origin `(u, relation index, w)`.
pub(crate) type ProductRow<F> = (SparseVec<F>, (Word, usize, Word));

/// Rows `u·r·w` of degree `n` in the free algebra, columns indexed by
/// [`Word::rank_index`]. Each row carries `(u, relation index, w)`.
pub(crate) fn free_products<F: Coefficient>(
    relations: &[Vec<(Word, TowerScalar)>],
    n: usize,
) -> Result<Vec<ProductRow<F>>, AlgebraError> {
    let mut out = Vec::new();
    for (ri, r) in relations.iter().enumerate() {
        let Some(deg) = r.first().map(|(w, _)| w.len()) else {
            continue;
        };
        if deg > n {
            continue;
        }
        let conv: Vec<(Word, F)> = r
            .iter()
            .map(|(w, c)| {
                F::from_tower(c)
                    .map(|x| (w.clone(), x))
                    .ok_or(AlgebraError::Field(FieldError::MismatchedSpec))
            })
            .collect::<Result<_, _>>()?;
        for left_len in 0..=n - deg {
            let right_len = n - deg - left_len;
            for u in Word::all_of_length(left_len) {
                for w in Word::all_of_length(right_len) {
                    let mut row: SparseVec<F> = conv
                        .iter()
                        .map(|(m, c)| (u.concat(m).concat(&w).rank_index(), c.clone()))
                        .collect();
                    row.sort_by_key(|(c, _)| *c);
                    out.push((row, (u.clone(), ri, w)));
                }
            }
        }
    }
    Ok(out)
}
