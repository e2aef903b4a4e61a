use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A total ordering of the vertices `0..n`, stored with its inverse.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ordering {
    perm: Vec<usize>,
    pos: Vec<usize>,
}

impl Ordering {
    pub fn new(perm: Vec<usize>) -> Result<Self> {
        let n = perm.len();
        let mut pos = vec![usize::MAX; n];
        for (i, &v) in perm.iter().enumerate() {
            if v >= n || pos[v] != usize::MAX {
                return Err(Error::NotAPermutation(n));
            }
            pos[v] = i;
        }
        Ok(Ordering { perm, pos })
    }

    pub fn identity(n: usize) -> Self {
        Ordering {
            perm: (0..n).collect(),
            pos: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    /// Vertices from first to last.
    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn position(&self, v: usize) -> usize {
        self.pos[v]
    }

    /// `u` comes strictly before `v`.
    pub fn precedes(&self, u: usize, v: usize) -> bool {
        self.pos[u] < self.pos[v]
    }

    /// The opposite ordering.
    pub fn reversed(&self) -> Ordering {
        let perm: Vec<usize> = self.perm.iter().rev().copied().collect();
        let n = perm.len();
        let pos = self.pos.iter().map(|&p| n - 1 - p).collect();
        Ordering { perm, pos }
    }

    pub(crate) fn check_len(&self, n: usize) -> Result<()> {
        if self.len() != n {
            return Err(Error::OrderingMismatch {
                expected: n,
                got: self.len(),
            });
        }
        Ok(())
    }
}

impl Serialize for Ordering {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.perm.serialize(s)
    }
}

/// Rearrange `perm` into the next permutation in lexicographic order.
/// Returns `false` (leaving `perm` sorted ascending) once the last one is passed.
pub fn next_permutation(perm: &mut [usize]) -> bool {
    let n = perm.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        perm.reverse();
        return false;
    }
    let mut j = n - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_permutations() {
        assert!(Ordering::new(vec![0, 0]).is_err());
        assert!(Ordering::new(vec![0, 2]).is_err());
        assert!(Ordering::new(vec![]).is_ok());
    }

    #[test]
    fn inverse_and_reverse() {
        let o = Ordering::new(vec![2, 0, 1]).unwrap();
        for (i, &v) in o.perm().iter().enumerate() {
            assert_eq!(o.position(v), i);
        }
        let r = o.reversed();
        assert_eq!(r.perm(), &[1, 0, 2]);
        assert_eq!(r.position(1), 0);
        assert_eq!(r.reversed(), o);
    }

    #[test]
    fn lexicographic_enumeration() {
        let mut p = vec![0, 1, 2];
        let mut all = vec![p.clone()];
        while next_permutation(&mut p) {
            all.push(p.clone());
        }
        assert_eq!(all.len(), 6);
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(all, sorted);
        assert_eq!(p, vec![0, 1, 2]);
    }
}
