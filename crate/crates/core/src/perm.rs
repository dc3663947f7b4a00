//! Permutations of {1..n}, stored 0-based as an image vector.

use std::fmt;

/// A permutation σ with `images[i] = σ(i+1) − 1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm {
            images: (0..n).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Self {
        debug_assert!({
            let mut seen = vec![false; images.len()];
            images.iter().all(|&i| {
                let fresh = !seen[i];
                seen[i] = true;
                fresh
            })
        });
        Perm { images }
    }

    /// Transposition of the 0-based points a and b.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(a, b);
        Perm { images }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// σ(i) on 0-based points.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    /// Function composition self ∘ other: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.len(), other.len());
        Perm {
            images: (0..self.len()).map(|i| self.apply(other.apply(i))).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0; self.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v] = i;
        }
        Perm { images }
    }

    /// Sign of the permutation via cycle parity.
    pub fn sign(&self) -> i64 {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut transpositions = 0usize;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0usize;
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                cur = self.images[cur];
                len += 1;
            }
            transpositions += len - 1;
        }
        if transpositions.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                cycle.push(cur);
                cur = self.images[cur];
            }
            if cycle.len() > 1 {
                cycles.push(cycle);
            }
        }
        cycles
    }
}

impl fmt::Display for Perm {
    /// Cycle notation on 1-based points; the identity prints `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            let inner: Vec<String> = cycle.iter().map(|&p| (p + 1).to_string()).collect();
            write!(f, "({})", inner.join(" "))?;
        }
        Ok(())
    }
}

/// All permutations of {0..n-1} in lexicographic order of image vectors.
pub fn all_perms(n: usize) -> Vec<Perm> {
    let mut images: Vec<usize> = (0..n).collect();
    let mut out = vec![Perm::from_images(images.clone())];
    while next_permutation(&mut images) {
        out.push(Perm::from_images(images.clone()));
    }
    out
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_applies_rightmost_first() {
        let sigma = Perm::transposition(3, 0, 1);
        let pi = Perm::transposition(3, 1, 2);
        let c = sigma.compose(&pi);
        assert_eq!(c.apply(1), 2);
        assert_eq!(c.apply(2), 0);
        assert_eq!(c.apply(0), 1);
    }

    #[test]
    fn inverse_roundtrip() {
        let p = Perm::from_images(vec![2, 0, 3, 1]);
        assert!(p.compose(&p.inverse()).is_identity());
        assert!(p.inverse().compose(&p).is_identity());
    }

    #[test]
    fn sign_of_cycles() {
        assert_eq!(Perm::identity(4).sign(), 1);
        assert_eq!(Perm::transposition(4, 0, 2).sign(), -1);
        let c3 = Perm::from_images(vec![1, 2, 0]);
        assert_eq!(c3.sign(), 1);
    }

    #[test]
    fn enumeration_is_complete_and_sorted() {
        let ps = all_perms(4);
        assert_eq!(ps.len(), 24);
        let mut sorted = ps.clone();
        sorted.sort();
        assert_eq!(ps, sorted);
    }

    #[test]
    fn cycle_display() {
        assert_eq!(Perm::identity(3).to_string(), "()");
        assert_eq!(Perm::transposition(3, 0, 1).to_string(), "(1 2)");
    }
}
