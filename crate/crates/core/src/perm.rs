//! Permutations of `{1..n}` and their cycle types.
//!
//! A [`Permutation`] records where each strand ends up: `image(k)` is the
//! final position of the strand that starts at position `k`. Products are
//! read left to right, so `p.then(&q)` applies `p` first. With this
//! convention the braid `σ1σ2` maps to the cycle `(1,3,2)`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::{BraidError, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    // zero-based images
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n).collect(),
        }
    }

    /// Builds a permutation from its one-line notation with 1-based images.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = alloc::vec![false; n];
        let mut zero_based = Vec::with_capacity(n);
        for &img in images {
            if img == 0 || img > n || seen[img - 1] {
                return Err(BraidError::InvalidPermutation(n));
            }
            seen[img - 1] = true;
            zero_based.push(img - 1);
        }
        Ok(Self { images: zero_based })
    }

    /// Builds a permutation of degree `n` from disjoint 1-based cycles; the
    /// cycle `(a, b, c)` sends `a → b → c → a`.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut touched = alloc::vec![false; n];
        for cycle in cycles {
            for (pos, &a) in cycle.iter().enumerate() {
                let b = cycle[(pos + 1) % cycle.len()];
                if a == 0 || a > n || b == 0 || b > n || touched[a - 1] {
                    return Err(BraidError::InvalidPermutation(n));
                }
                touched[a - 1] = true;
                images[a - 1] = b - 1;
            }
        }
        Ok(Self { images })
    }

    /// The transposition exchanging `i` and `j` (1-based).
    pub fn transposition(n: usize, i: usize, j: usize) -> Result<Self> {
        Self::from_cycles(n, &[&[i, j]])
    }

    pub(crate) fn from_zero_based(images: Vec<usize>) -> Self {
        debug_assert!({
            let mut sorted = images.clone();
            sorted.sort_unstable();
            sorted.iter().enumerate().all(|(k, &v)| k == v)
        });
        Self { images }
    }

    pub(crate) fn as_zero_based(&self) -> &[usize] {
        &self.images
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// 1-based image of the 1-based point `k`.
    pub fn image(&self, k: usize) -> usize {
        self.images[k - 1] + 1
    }

    /// One-line notation, 1-based.
    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &v)| k == v)
    }

    /// Left-to-right product: `self` is applied first, then `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "permutation degrees differ");
        Self {
            images: self.images.iter().map(|&v| other.images[v]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = alloc::vec![0; self.degree()];
        for (k, &v) in self.images.iter().enumerate() {
            inv[v] = k;
        }
        Self { images: inv }
    }

    pub fn pow(&self, exp: i64) -> Permutation {
        let base = if exp < 0 {
            self.inverse()
        } else {
            self.clone()
        };
        let mut acc = Self::identity(self.degree());
        for _ in 0..exp.unsigned_abs() {
            acc = acc.then(&base);
        }
        acc
    }

    /// Nontrivial cycles, each listed from its smallest point, ordered by
    /// smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = alloc::vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                cycle.push(k + 1);
                k = self.images[k];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> CycleType {
        let parts = self.cycles().iter().map(Vec::len).collect();
        CycleType::from_parts_unchecked(self.degree(), parts)
    }

    /// Order in `S_n`: the lcm of the cycle lengths.
    pub fn order(&self) -> usize {
        self.cycles().iter().map(Vec::len).fold(1, lcm)
    }

    /// The cyclic subgroup generated by `self`, starting with the identity.
    pub fn powers(&self) -> Vec<Permutation> {
        let mut out = alloc::vec![Self::identity(self.degree())];
        let mut cur = self.clone();
        while !cur.is_identity() {
            out.push(cur.clone());
            cur = cur.then(self);
        }
        out
    }

    pub fn one_line_string(&self) -> String {
        let mut s = String::new();
        for (pos, v) in self.one_line().into_iter().enumerate() {
            if pos > 0 {
                s.push(' ');
            }
            s.push_str(&alloc::format!("{v}"));
        }
        s
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (pos, v) in cycle.iter().enumerate() {
                if pos > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{v}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]", self.one_line_string())
    }
}

/// Multiset of nontrivial cycle lengths (each ≥ 2) of a permutation of
/// degree `n`, kept sorted in decreasing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType {
    n: usize,
    parts: Vec<usize>,
}

impl CycleType {
    pub fn new(n: usize, parts: &[usize]) -> Result<Self> {
        if parts.iter().any(|&p| p < 2) {
            return Err(BraidError::InvalidArgument(alloc::format!(
                "cycle type parts must be at least 2, got {parts:?}"
            )));
        }
        let total: usize = parts.iter().sum();
        if total > n {
            return Err(BraidError::InvalidArgument(alloc::format!(
                "cycle type {parts:?} does not fit in {n} points"
            )));
        }
        Ok(Self::from_parts_unchecked(n, parts.to_vec()))
    }

    fn from_parts_unchecked(n: usize, mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { n, parts }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    /// Parts in decreasing order.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Same multiset of lengths, ignoring the ambient degree.
    pub fn same_shape(&self, other: &CycleType) -> bool {
        self.parts == other.parts
    }

    /// Number of parts equal to each length.
    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// Every nonempty cycle type of degree `n`, i.e. every conjugacy class
    /// of non-identity permutations in `S_n`. Ordered by decreasing parts.
    pub fn all_nontrivial(n: usize) -> Vec<CycleType> {
        fn rec(remaining: usize, max_part: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if !cur.is_empty() {
                out.push(cur.clone());
            }
            for part in (2..=max_part.min(remaining)).rev() {
                cur.push(part);
                rec(remaining - part, part, cur, out);
                cur.pop();
            }
        }
        let mut raw = Vec::new();
        rec(n, n, &mut Vec::new(), &mut raw);
        raw.sort_unstable_by(|a, b| b.cmp(a));
        raw.into_iter().map(|parts| Self { n, parts }).collect()
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (pos, p) in self.parts.iter().enumerate() {
            if pos > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn cycle_notation_follows_image_direction() {
        let p = Permutation::from_images(&[3, 1, 2]).unwrap();
        assert_eq!(alloc::format!("{p}"), "(1,3,2)");
        assert_eq!(p, Permutation::from_cycles(3, &[&[1, 3, 2]]).unwrap());
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_images(&[1, 1, 2]).is_err());
        assert!(Permutation::from_images(&[0, 1]).is_err());
        assert!(Permutation::from_cycles(3, &[&[1, 2], &[2, 3]]).is_err());
    }

    #[test]
    fn cycle_types() {
        assert!(Permutation::identity(4).cycle_type().is_empty());
        let three = Permutation::from_cycles(3, &[&[1, 3, 2]]).unwrap();
        assert_eq!(three.cycle_type().parts(), &[3]);
        let two_two = Permutation::from_cycles(4, &[&[1, 4], &[2, 3]]).unwrap();
        assert_eq!(two_two.cycle_type().parts(), &[2, 2]);
    }

    #[test]
    fn left_to_right_product() {
        let s1 = Permutation::transposition(3, 1, 2).unwrap();
        let s2 = Permutation::transposition(3, 2, 3).unwrap();
        assert_eq!(alloc::format!("{}", s1.then(&s2)), "(1,3,2)");
        assert_eq!(alloc::format!("{}", s2.then(&s1)), "(1,2,3)");
    }

    #[test]
    fn powers_and_order() {
        let p = Permutation::from_cycles(5, &[&[1, 2, 3], &[4, 5]]).unwrap();
        assert_eq!(p.order(), 6);
        assert_eq!(p.powers().len(), 6);
        assert!(p.pow(6).is_identity());
        assert_eq!(p.pow(-1), p.inverse());
    }

    #[test]
    fn nontrivial_type_counts() {
        let counts: Vec<usize> = (3..=6)
            .map(|n| CycleType::all_nontrivial(n).len())
            .collect();
        assert_eq!(counts, vec![2, 4, 6, 10]);
    }

    #[test]
    fn cycle_type_validation() {
        assert!(CycleType::new(4, &[3, 2]).is_err());
        assert!(CycleType::new(4, &[1]).is_err());
        assert_eq!(CycleType::new(5, &[2, 3]).unwrap().parts(), &[3, 2]);
    }
}
