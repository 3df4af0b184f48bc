use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `{1..n}`, stored 0-based: slot `i` maps to `images[i]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// From 0-based images; fails unless bijective.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::NotAPermutation(n));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// From 1-based images, as permutations are usually written.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        if images.contains(&0) {
            return Err(Error::NotAPermutation(images.len()));
        }
        Self::new(images.iter().map(|x| x - 1).collect())
    }

    /// The transposition of 0-based slots `a` and `b`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut p = Self::identity(n);
        p.images.swap(a, b);
        p
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    /// `+1` or `-1`.
    pub fn sign(&self) -> i32 {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut parity = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i];
                len += 1;
            }
            parity += len - 1;
        }
        if parity % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len());
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { images: inv }
    }

    /// Advances to the lexicographically next permutation; `false` after the last.
    pub fn next_lex(&mut self) -> bool {
        let v = &mut self.images;
        let n = v.len();
        if n < 2 {
            return false;
        }
        let mut i = n - 1;
        while i > 0 && v[i - 1] >= v[i] {
            i -= 1;
        }
        if i == 0 {
            return false;
        }
        let mut j = n - 1;
        while v[j] <= v[i - 1] {
            j -= 1;
        }
        v.swap(i - 1, j);
        v[i..].reverse();
        true
    }

    /// All permutations of `n` in lexicographic order of their image lists.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut p = Permutation::identity(n);
        loop {
            out.push(p.clone());
            if !p.next_lex() {
                break;
            }
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(|x| (x + 1).to_string()).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_is_lexicographic_and_complete() {
        let all = Permutation::all(4);
        assert_eq!(all.len(), 24);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(all.iter().map(|p| p.sign()).sum::<i32>(), 0);
    }

    #[test]
    fn sign_and_composition() {
        let t = Permutation::transposition(3, 0, 2);
        assert_eq!(t.sign(), -1);
        let c = Permutation::from_one_based(&[2, 3, 1]).unwrap();
        assert_eq!(c.sign(), 1);
        assert_eq!(c.compose(&c.inverse()), Permutation::identity(3));
        assert!(Permutation::new(vec![0, 0]).is_err());
    }
}
