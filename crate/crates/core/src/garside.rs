//! Garside left normal form.
//!
//! Every braid has a unique expression `Δ^p · s_1 ⋯ s_k` where `Δ` is the
//! half twist on all strands, each `s_j` is a permutation braid other than
//! `1` and `Δ`, and each adjacent pair `(s_j, s_{j+1})` is left-weighted:
//! every generator that can start `s_{j+1}` can already end `s_j`. Two words
//! are equal in `B_n` exactly when their normal forms coincide.
//!
//! Permutation braids are stored as permutations (one array for the strand
//! destinations and one for its inverse) so that moving a single crossing
//! from one factor to its neighbour costs O(1).

use alloc::vec::Vec;
use core::fmt;

use crate::perm::Permutation;
use crate::word::{BraidWord, Letter};

/// A positive braid in which every pair of strands crosses at most once.
/// `fwd[k]` is the final position of the strand starting at `k`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub(crate) struct Simple {
    fwd: Vec<usize>,
    inv: Vec<usize>,
}

impl Simple {
    fn identity(n: usize) -> Self {
        let id: Vec<usize> = (0..n).collect();
        Self {
            fwd: id.clone(),
            inv: id,
        }
    }

    fn from_fwd(fwd: Vec<usize>) -> Self {
        let mut inv = alloc::vec![0; fwd.len()];
        for (k, &v) in fwd.iter().enumerate() {
            inv[v] = k;
        }
        Self { fwd, inv }
    }

    fn from_permutation(p: &Permutation) -> Self {
        Self::from_fwd(p.as_zero_based().to_vec())
    }

    /// `σ_{i+1}` as a simple element.
    fn generator(n: usize, i: usize) -> Self {
        let mut s = Self::identity(n);
        s.fwd.swap(i, i + 1);
        s.inv.swap(i, i + 1);
        s
    }

    /// `Δ σ_{i+1}⁻¹`, the simple element `c` with `c σ_{i+1} = Δ`.
    fn delta_over_generator(n: usize, i: usize) -> Self {
        let swap = |v: usize| {
            if v == i {
                i + 1
            } else if v == i + 1 {
                i
            } else {
                v
            }
        };
        Self::from_fwd((0..n).map(|k| swap(n - 1 - k)).collect())
    }

    /// The simple element `x` with `x · self = Δ`.
    fn left_complement(&self) -> Self {
        let n = self.fwd.len();
        Self::from_fwd((0..n).map(|k| self.inv[n - 1 - k]).collect())
    }

    fn n(&self) -> usize {
        self.fwd.len()
    }

    fn is_identity(&self) -> bool {
        self.fwd.iter().enumerate().all(|(k, &v)| k == v)
    }

    fn is_delta(&self) -> bool {
        let n = self.n();
        self.fwd.iter().enumerate().all(|(k, &v)| v == n - 1 - k)
    }

    /// `σ_{i+1}` is a prefix: the strands starting at `i` and `i+1` cross.
    fn starts_with(&self, i: usize) -> bool {
        self.fwd[i] > self.fwd[i + 1]
    }

    /// `σ_{i+1}` is a suffix: the strands ending at `i` and `i+1` cross.
    fn ends_with(&self, i: usize) -> bool {
        self.inv[i] > self.inv[i + 1]
    }

    /// `self ← self · σ_{i+1}`; requires `!ends_with(i)`.
    fn absorb_right(&mut self, i: usize) {
        let (a, b) = (self.inv[i], self.inv[i + 1]);
        self.inv.swap(i, i + 1);
        self.fwd[a] = i + 1;
        self.fwd[b] = i;
    }

    /// `self ← σ_{i+1}⁻¹ · self`; requires `starts_with(i)`.
    fn strip_left(&mut self, i: usize) {
        self.fwd.swap(i, i + 1);
        let (a, b) = (self.fwd[i], self.fwd[i + 1]);
        self.inv[a] = i;
        self.inv[b] = i + 1;
    }

    /// Conjugation by `Δ`: `σ_i ↦ σ_{n−i}`.
    fn flip(&mut self) {
        let n = self.n();
        let flip_array =
            |arr: &[usize]| -> Vec<usize> { (0..n).map(|k| n - 1 - arr[n - 1 - k]).collect() };
        self.fwd = flip_array(&self.fwd);
        self.inv = flip_array(&self.inv);
    }

    fn crossings(&self) -> usize {
        let n = self.n();
        let mut count = 0;
        for a in 0..n {
            for b in (a + 1)..n {
                if self.fwd[a] > self.fwd[b] {
                    count += 1;
                }
            }
        }
        count
    }

    fn to_permutation(&self) -> Permutation {
        Permutation::from_zero_based(self.fwd.clone())
    }
}

/// Rewrites `(a, b)` into the left-weighted pair with the same product.
/// Returns whether anything moved.
fn left_weight(a: &mut Simple, b: &mut Simple) -> bool {
    let n = a.n();
    if n < 2 {
        return false;
    }
    let mut changed = false;
    let mut i = 0;
    while i + 1 < n {
        if b.starts_with(i) && !a.ends_with(i) {
            a.absorb_right(i);
            b.strip_left(i);
            changed = true;
            i = i.saturating_sub(1);
        } else {
            i += 1;
        }
    }
    changed
}

fn is_left_weighted(a: &Simple, b: &Simple) -> bool {
    (0..a.n().saturating_sub(1)).all(|i| !b.starts_with(i) || a.ends_with(i))
}

/// Incremental normal form under right multiplication.
#[derive(Clone, Debug)]
pub(crate) struct NormalFormBuilder {
    n: usize,
    delta: i64,
    factors: Vec<Simple>,
}

impl NormalFormBuilder {
    pub(crate) fn new(n: usize) -> Self {
        Self {
            n,
            delta: 0,
            factors: Vec::new(),
        }
    }

    fn from_normal_form(nf: &GarsideNormalForm) -> Self {
        Self {
            n: nf.n,
            delta: nf.delta_power,
            factors: nf.factors.iter().map(Simple::from_permutation).collect(),
        }
    }

    fn push_simple(&mut self, s: Simple) {
        if s.is_identity() {
            return;
        }
        self.factors.push(s);
        let mut j = self.factors.len() - 1;
        while j > 0 {
            let (head, tail) = self.factors.split_at_mut(j);
            if !left_weight(&mut head[j - 1], &mut tail[0]) {
                break;
            }
            j -= 1;
        }
        let leading_deltas = self.factors.iter().take_while(|f| f.is_delta()).count();
        if leading_deltas > 0 {
            self.factors.drain(..leading_deltas);
            self.delta += leading_deltas as i64;
        }
        while self.factors.last().is_some_and(Simple::is_identity) {
            self.factors.pop();
        }
    }

    /// Right multiplication by `Δ^e`: `s Δ = Δ τ(s)`.
    fn push_delta_power(&mut self, e: i64) {
        self.delta += e;
        if e % 2 != 0 {
            for f in &mut self.factors {
                f.flip();
            }
        }
    }

    pub(crate) fn push_letter(&mut self, l: Letter) {
        let i = l.index() - 1;
        if l.is_positive() {
            self.push_simple(Simple::generator(self.n, i));
        } else {
            // σ⁻¹ = Δ⁻¹ (Δ σ⁻¹)
            self.push_delta_power(-1);
            self.push_simple(Simple::delta_over_generator(self.n, i));
        }
    }

    fn push_normal_form(&mut self, other: &GarsideNormalForm) {
        debug_assert_eq!(self.n, other.n);
        self.push_delta_power(other.delta_power);
        for f in &other.factors {
            self.push_simple(Simple::from_permutation(f));
        }
    }

    pub(crate) fn finish(self) -> GarsideNormalForm {
        GarsideNormalForm {
            n: self.n,
            delta_power: self.delta,
            factors: self.factors.iter().map(Simple::to_permutation).collect(),
        }
    }
}

/// Canonical form `Δ^p · s_1 ⋯ s_k` of a braid.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GarsideNormalForm {
    n: usize,
    delta_power: i64,
    factors: Vec<Permutation>,
}

impl GarsideNormalForm {
    pub fn identity(n: usize) -> Self {
        Self {
            n,
            delta_power: 0,
            factors: Vec::new(),
        }
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    /// The infimum `p`.
    pub fn delta_power(&self) -> i64 {
        self.delta_power
    }

    pub fn factors(&self) -> &[Permutation] {
        &self.factors
    }

    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    pub fn is_identity(&self) -> bool {
        self.delta_power == 0 && self.factors.is_empty()
    }

    /// Product of two braids given in normal form.
    pub fn multiply(&self, other: &GarsideNormalForm) -> GarsideNormalForm {
        assert_eq!(self.n, other.n, "strand counts differ");
        let mut b = NormalFormBuilder::from_normal_form(self);
        b.push_normal_form(other);
        b.finish()
    }

    pub fn inverse(&self) -> GarsideNormalForm {
        // (Δ^p s_1⋯s_k)⁻¹ = s_k⁻¹ ⋯ s_1⁻¹ Δ^{-p}, with s⁻¹ = Δ⁻¹ (Δ s⁻¹).
        let mut b = NormalFormBuilder::new(self.n);
        for f in self.factors.iter().rev() {
            let s = Simple::from_permutation(f);
            b.push_delta_power(-1);
            b.push_simple(s.left_complement());
        }
        b.push_delta_power(-self.delta_power);
        b.finish()
    }

    /// Exponent sum recovered from the factorization.
    pub fn exponent_sum(&self) -> i64 {
        let n = self.n as i64;
        let crossings: usize = self
            .factors
            .iter()
            .map(|f| Simple::from_permutation(f).crossings())
            .sum();
        self.delta_power * n * (n - 1) / 2 + crossings as i64
    }

    /// Image in `S_n`.
    pub fn permutation(&self) -> Permutation {
        let delta = Permutation::from_zero_based((0..self.n).rev().collect());
        let mut p = delta.pow(self.delta_power.rem_euclid(2));
        for f in &self.factors {
            p = p.then(f);
        }
        p
    }

    /// A braid word representing this element: `Δ^p` spelled out, then each
    /// factor as its permutation braid.
    pub fn to_word(&self) -> BraidWord {
        let n = self.n;
        let delta = delta_word(n);
        let mut w = delta.pow(self.delta_power);
        for f in &self.factors {
            w = w
                .compose(&crate::subgroup::lift_permutation(f))
                .expect("same strand count");
        }
        w
    }

    /// Structural validity: every factor is a proper simple element and every
    /// adjacent pair is left-weighted.
    pub fn is_well_formed(&self) -> bool {
        let simples: Vec<Simple> = self.factors.iter().map(Simple::from_permutation).collect();
        simples
            .iter()
            .all(|s| !s.is_identity() && !s.is_delta() && s.n() == self.n)
            && simples
                .windows(2)
                .all(|pair| is_left_weighted(&pair[0], &pair[1]))
    }
}

fn delta_word(n: usize) -> BraidWord {
    if n < 2 {
        BraidWord::identity(n)
    } else {
        BraidWord::half_twist(n, n).expect("valid half twist")
    }
}

impl fmt::Display for GarsideNormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D^{}", self.delta_power)?;
        for factor in &self.factors {
            write!(f, " | {}", factor.one_line_string())?;
        }
        Ok(())
    }
}

impl fmt::Debug for GarsideNormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NF{}[{}]", self.n, self)
    }
}

/// Left normal form of a braid word.
pub fn normal_form(word: &BraidWord) -> GarsideNormalForm {
    let mut b = NormalFormBuilder::new(word.strands());
    for &l in word.letters() {
        b.push_letter(l);
    }
    b.finish()
}
