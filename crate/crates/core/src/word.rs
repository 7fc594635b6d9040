//! Braid words in the Artin generators and the homomorphisms defined on them.
//!
//! The text syntax used throughout the workspace is a whitespace-separated
//! list of tokens `s<k>` (for `σ_k`) and `s<k>^-1` (for `σ_k⁻¹`); the empty
//! string is the identity.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::perm::Permutation;
use crate::{BraidError, Result};

/// A signed Artin generator: `Letter(k)` is `σ_k`, `Letter(-k)` is `σ_k⁻¹`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(i32);

impl Letter {
    pub fn new(index: usize, positive: bool) -> Self {
        assert!(index >= 1, "generator indices start at 1");
        let k = i32::try_from(index).expect("generator index overflows i32");
        Letter(if positive { k } else { -k })
    }

    pub fn pos(index: usize) -> Self {
        Self::new(index, true)
    }

    pub fn neg(index: usize) -> Self {
        Self::new(index, false)
    }

    pub fn index(self) -> usize {
        self.0.unsigned_abs() as usize
    }

    pub fn is_positive(self) -> bool {
        self.0 > 0
    }

    pub fn sign(self) -> i64 {
        if self.0 > 0 {
            1
        } else {
            -1
        }
    }

    pub fn inverse(self) -> Self {
        Letter(-self.0)
    }

    pub(crate) fn signed(self) -> i32 {
        self.0
    }

    pub(crate) fn from_signed(v: i32) -> Self {
        debug_assert!(v != 0);
        Letter(v)
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_positive() {
            write!(f, "s{}", self.index())
        } else {
            write!(f, "s{}^-1", self.index())
        }
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Letter {
    type Err = BraidError;

    fn from_str(token: &str) -> Result<Self> {
        let bad = || BraidError::Parse(String::from(token));
        let body = token.strip_prefix('s').ok_or_else(bad)?;
        let (digits, positive) = match body.strip_suffix("^-1") {
            Some(d) => (d, false),
            None => (body, true),
        };
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let index: usize = digits.parse().map_err(|_| bad())?;
        if index == 0 || index > i32::MAX as usize {
            return Err(bad());
        }
        Ok(Letter::new(index, positive))
    }
}

/// A word in `σ_1^{±1}, …, σ_{n-1}^{±1}` on `n` strands.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    n: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "a braid needs at least one strand");
        Self {
            n,
            letters: Vec::new(),
        }
    }

    /// Builds a word, checking every index lies in `1..n`. No reduction is
    /// applied.
    pub fn new(n: usize, letters: Vec<Letter>) -> Result<Self> {
        if n == 0 {
            return Err(BraidError::InvalidArgument(
                "strand count must be at least 1".into(),
            ));
        }
        if let Some(bad) = letters.iter().find(|l| l.index() >= n) {
            return Err(BraidError::IndexOutOfRange {
                index: bad.index(),
                strands: n,
            });
        }
        Ok(Self { n, letters })
    }

    /// Convenience constructor from signed indices, `-2` meaning `σ_2⁻¹`.
    pub fn from_signed(n: usize, letters: &[i32]) -> Result<Self> {
        if letters.contains(&0) {
            return Err(BraidError::InvalidArgument("0 is not a generator".into()));
        }
        Self::new(n, letters.iter().map(|&v| Letter(v)).collect())
    }

    pub(crate) fn from_letters_unchecked(n: usize, letters: Vec<Letter>) -> Self {
        debug_assert!(letters.iter().all(|l| l.index() < n));
        Self { n, letters }
    }

    /// Parses the text syntax. Without an explicit strand count the word
    /// lives on `1 + max index` strands (one strand for the empty word).
    pub fn parse(text: &str, n: Option<usize>) -> Result<Self> {
        let letters = text
            .split_whitespace()
            .map(Letter::from_str)
            .collect::<Result<Vec<_>>>()?;
        let needed = letters.iter().map(|l| l.index() + 1).max().unwrap_or(1);
        match n {
            Some(n) => Self::new(n, letters),
            None => Ok(Self { n: needed, letters }),
        }
    }

    /// `σ_i` on `n` strands.
    pub fn artin(i: usize, n: usize) -> Result<Self> {
        if i == 0 {
            return Err(BraidError::IndexOutOfRange {
                index: 0,
                strands: n,
            });
        }
        Self::new(n, alloc::vec![Letter::pos(i)])
    }

    /// The half twist `Δ_k = σ1(σ2σ1)⋯(σ_{k−1}⋯σ1)` viewed in `B_n`.
    pub fn half_twist(k: usize, n: usize) -> Result<Self> {
        if k < 2 || k > n {
            return Err(BraidError::InvalidArgument(alloc::format!(
                "half twist needs 2 <= k <= n, got k = {k}, n = {n}"
            )));
        }
        Ok(Self {
            n,
            letters: half_twist_letters(k),
        })
    }

    /// The full twist `(σ1⋯σ_{n−1})^n`.
    pub fn full_twist(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(BraidError::InvalidArgument(alloc::format!(
                "full twist needs at least 2 strands, got {n}"
            )));
        }
        let row: Vec<Letter> = (1..n).map(Letter::pos).collect();
        let letters = core::iter::repeat_n(row, n).flatten().collect();
        Ok(Self { n, letters })
    }

    /// The pure braid generator
    /// `A_{i,j} = (σ_{j−1}⋯σ_{i+1}) σ_i² (σ_{i+1}⁻¹⋯σ_{j−1}⁻¹)`.
    pub fn pure_generator(i: usize, j: usize, n: usize) -> Result<Self> {
        if i < 1 || i >= j || j > n {
            return Err(BraidError::InvalidArgument(alloc::format!(
                "pure generator needs 1 <= i < j <= n, got ({i}, {j}) in {n}"
            )));
        }
        let mut letters: Vec<Letter> = ((i + 1)..j).rev().map(Letter::pos).collect();
        letters.push(Letter::pos(i));
        letters.push(Letter::pos(i));
        letters.extend(((i + 1)..j).map(Letter::neg));
        Ok(Self { n, letters })
    }

    pub fn strands(&self) -> usize {
        self.n
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

    fn check_same_strands(&self, other: &BraidWord) -> Result<()> {
        if self.n != other.n {
            return Err(BraidError::StrandMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    /// Concatenation followed by free reduction.
    pub fn compose(&self, other: &BraidWord) -> Result<BraidWord> {
        self.check_same_strands(other)?;
        let mut letters = self.letters.clone();
        for &l in &other.letters {
            push_reduced(&mut letters, l);
        }
        Ok(Self { n: self.n, letters })
    }

    /// Plain concatenation, no cancellation.
    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        self.check_same_strands(other)?;
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Self { n: self.n, letters })
    }

    /// Product of several words on the same strand count.
    pub fn product<'a, I>(n: usize, words: I) -> Result<BraidWord>
    where
        I: IntoIterator<Item = &'a BraidWord>,
    {
        let mut acc = Self::identity(n);
        for w in words {
            acc.check_same_strands(w)?;
            for &l in &w.letters {
                push_reduced(&mut acc.letters, l);
            }
        }
        Ok(acc)
    }

    pub fn inverse(&self) -> BraidWord {
        Self {
            n: self.n,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// `self^e`, freely reduced; negative exponents use the inverse.
    pub fn pow(&self, e: i64) -> BraidWord {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.len() * e.unsigned_abs() as usize);
        for _ in 0..e.unsigned_abs() {
            for &l in &base.letters {
                push_reduced(&mut letters, l);
            }
        }
        Self { n: self.n, letters }
    }

    /// Cancels adjacent `σ_i σ_i⁻¹` pairs until none remain.
    pub fn free_reduce(&self) -> BraidWord {
        let mut letters = Vec::with_capacity(self.len());
        for &l in &self.letters {
            push_reduced(&mut letters, l);
        }
        Self { n: self.n, letters }
    }

    /// Image in `ℤ` under the abelianization `σ_i ↦ 1`.
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.sign()).sum()
    }

    /// Image in `S_n`; letters act left to right, each `σ_i` swapping the
    /// strands at positions `i` and `i+1`.
    pub fn permutation(&self) -> Permutation {
        // position -> strand currently there
        let mut at: Vec<usize> = (0..self.n).collect();
        for l in &self.letters {
            at.swap(l.index() - 1, l.index());
        }
        let mut images = alloc::vec![0; self.n];
        for (pos, &strand) in at.iter().enumerate() {
            images[strand] = pos;
        }
        Permutation::from_zero_based(images)
    }

    /// Deletes the strand starting at position `i` (1-based): every crossing
    /// it takes part in is removed and the remaining letters are renumbered
    /// for `n − 1` strands. On pure braids this is the strand-forgetting
    /// homomorphism `P_n → P_{n−1}`.
    pub fn forget_strand(&self, i: usize) -> Result<BraidWord> {
        if self.n < 2 {
            return Err(BraidError::InvalidArgument(
                "cannot forget the only strand".into(),
            ));
        }
        if i < 1 || i > self.n {
            return Err(BraidError::IndexOutOfRange {
                index: i,
                strands: self.n,
            });
        }
        let mut tracked = i;
        let mut letters = Vec::with_capacity(self.len());
        for &l in &self.letters {
            let k = l.index();
            if k == tracked {
                tracked = k + 1;
            } else if k + 1 == tracked {
                tracked = k;
            } else if k > tracked {
                push_reduced(&mut letters, Letter::new(k - 1, l.is_positive()));
            } else {
                push_reduced(&mut letters, l);
            }
        }
        Ok(Self {
            n: self.n - 1,
            letters,
        })
    }

    /// Same letters on one more strand.
    pub fn stabilize(&self) -> BraidWord {
        Self {
            n: self.n + 1,
            letters: self.letters.clone(),
        }
    }

    /// Same letters on `m ≥ n` strands.
    pub fn with_strands(&self, m: usize) -> Result<BraidWord> {
        Self::new(m, self.letters.clone())
    }

    /// Conjugation by the half twist `Δ_n`: `σ_i ↦ σ_{n−i}`.
    pub fn flip(&self) -> BraidWord {
        let n = self.n;
        Self {
            n,
            letters: self
                .letters
                .iter()
                .map(|l| Letter::new(n - l.index(), l.is_positive()))
                .collect(),
        }
    }

    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|l| l.is_positive())
    }
}

fn half_twist_letters(k: usize) -> Vec<Letter> {
    let mut letters = Vec::with_capacity(k * (k - 1) / 2);
    for top in 1..k {
        letters.extend((1..=top).rev().map(Letter::pos));
    }
    letters
}

pub(crate) fn push_reduced(letters: &mut Vec<Letter>, l: Letter) {
    if letters.last() == Some(&l.inverse()) {
        letters.pop();
    } else {
        letters.push(l);
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (pos, l) in self.letters.iter().enumerate() {
            if pos > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B{}[{}]", self.n, self)
    }
}

impl FromStr for BraidWord {
    type Err = BraidError;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s, None)
    }
}

/// A braid of `B_∞`: finitely many letters with unbounded indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct InfiniteBraidWord {
    letters: Vec<Letter>,
}

impl InfiniteBraidWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        Self { letters }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let letters = text
            .split_whitespace()
            .map(Letter::from_str)
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { letters })
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// Least `m` with the braid in `B_m`: one more than the largest index.
    pub fn minimal_strands(&self) -> usize {
        self.letters
            .iter()
            .map(|l| l.index() + 1)
            .max()
            .unwrap_or(1)
    }

    /// The braid on its minimal strand count.
    pub fn embed(&self) -> BraidWord {
        BraidWord {
            n: self.minimal_strands(),
            letters: self.letters.clone(),
        }
    }
}

impl From<&BraidWord> for InfiniteBraidWord {
    fn from(w: &BraidWord) -> Self {
        Self {
            letters: w.letters.clone(),
        }
    }
}
