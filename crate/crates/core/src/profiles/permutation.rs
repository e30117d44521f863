use std::fmt;

use crate::error::{Error, Result};

/// A bijection on `0..len`, stored as its image sequence: `i ↦ images[i]`.
///
/// Used for relabelings of alternatives, permutations of voters and the
/// bijections that transport a profile onto the canonical alternative set.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &image in &images {
            if image >= images.len() || std::mem::replace(&mut seen[image], true) {
                return Err(Error::NotBijection(format!("{images:?}")));
            }
        }
        Ok(Permutation(images))
    }

    pub fn identity(len: usize) -> Self {
        Permutation((0..len).collect())
    }

    /// The transposition swapping `i` and `j`.
    pub fn transposition(len: usize, i: usize, j: usize) -> Self {
        let mut images: Vec<usize> = (0..len).collect();
        images.swap(i, j);
        Permutation(images)
    }

    /// Adjacent transpositions `(i, i+1)`, which generate the symmetric group.
    pub fn adjacent_transpositions(len: usize) -> Vec<Self> {
        (0..len.saturating_sub(1))
            .map(|i| Self::transposition(len, i, i + 1))
            .collect()
    }

    /// Every permutation of `0..len` in lexicographic order of image sequences.
    pub fn all(len: usize) -> Vec<Self> {
        all_sequences(len).into_iter().map(Permutation).collect()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (i, &image) in self.0.iter().enumerate() {
            inv[image] = i;
        }
        Permutation(inv)
    }

    /// `self ∘ first`: apply `first`, then `self`.
    pub fn compose(&self, first: &Permutation) -> Self {
        assert_eq!(
            self.len(),
            first.len(),
            "composing permutations of different size"
        );
        Permutation(first.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &image)| i == image)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{:?}", self.0)
    }
}

/// All orderings of `0..len` in lexicographic order.
pub(crate) fn all_sequences(len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..len).collect();
    loop {
        out.push(current.clone());
        if !next_permutation(&mut current) {
            return out;
        }
    }
}

/// Advances to the lexicographically next permutation; false when exhausted.
pub(crate) fn next_permutation<T: Ord>(seq: &mut [T]) -> bool {
    if seq.len() < 2 {
        return false;
    }
    let mut i = seq.len() - 1;
    while i > 0 && seq[i - 1] >= seq[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = seq.len() - 1;
    while seq[j] <= seq[i - 1] {
        j -= 1;
    }
    seq.swap(i - 1, j);
    seq[i..].reverse();
    true
}

pub(crate) fn factorial(n: usize) -> usize {
    (1..=n).product()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::new(vec![0, 0, 1]).is_err());
        assert!(Permutation::new(vec![0, 3, 1]).is_err());
        assert!(Permutation::new(vec![2, 0, 1]).is_ok());
    }

    #[test]
    fn all_is_lexicographic_and_complete() {
        let perms = Permutation::all(4);
        assert_eq!(perms.len(), 24);
        assert!(perms.windows(2).all(|w| w[0] < w[1]));
        assert!(perms[0].is_identity());
        assert_eq!(Permutation::all(0).len(), 1);
    }

    #[test]
    fn compose_and_inverse() {
        let p = Permutation::new(vec![2, 0, 1]).unwrap();
        let q = Permutation::transposition(3, 0, 1);
        assert!(p.compose(&p.inverse()).is_identity());
        // (p ∘ q)(0) = p(q(0)) = p(1) = 0
        assert_eq!(p.compose(&q).apply(0), 0);
        assert_eq!(q.compose(&p).apply(0), 2);
    }
}
