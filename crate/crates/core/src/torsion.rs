//! Certificates that an intermediate subgroup `H_β` is not bi-orderable.
//!
//! For a non-pure `β` the certificate exhibits `x, y ∈ H_β` with
//! `x^p = y^p` but `x ≠ y` (non-unique roots), the commutator
//! `g = [x, y] ≠ 1`, and conjugators `c_1, …, c_{p²}` with
//! `∏ c_j g c_j⁻¹ = 1` (so `g` is a generalized torsion element). The pair
//! `(x, y)` is first built for a fixed braid with the same cycle type as
//! `π(β)` and then conjugated into `H_β`.
//!
//! The conjugators come from a group-free identity: for any `x, y`,
//! `[x^p, y^p] = ∏_{a=p−1..0} ∏_{b=0..p−1} [x, y]^{x^a y^b}`, obtained by
//! peeling one `x` at a time with `[xa, c] = [a, c]^x [x, c]` and then one
//! `y` at a time with `[x, yb] = [x, y] [x, b]^y`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::garside::{normal_form, GarsideNormalForm};
use crate::perm::CycleType;
use crate::problem::{commutator, same_element};
use crate::subgroup::{canonical_representative, conjugacy_witness, subgroup_of};
use crate::word::{BraidWord, InfiniteBraidWord};
use crate::{BraidError, Result};

/// A word in two formal symbols `x` and `y`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct FormalWord {
    // 1 = x, 2 = y, negative = inverse
    letters: Vec<i8>,
}

impl FormalWord {
    pub const X: i8 = 1;
    pub const Y: i8 = 2;

    pub fn identity() -> Self {
        Self::default()
    }

    pub fn x() -> Self {
        Self {
            letters: alloc::vec![Self::X],
        }
    }

    pub fn y() -> Self {
        Self {
            letters: alloc::vec![Self::Y],
        }
    }

    pub fn letters(&self) -> &[i8] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Product with free reduction.
    pub fn mul(&self, other: &FormalWord) -> FormalWord {
        let mut letters = self.letters.clone();
        for &l in &other.letters {
            if letters.last() == Some(&-l) {
                letters.pop();
            } else {
                letters.push(l);
            }
        }
        Self { letters }
    }

    pub fn inverse(&self) -> FormalWord {
        Self {
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    pub fn pow(&self, e: usize) -> FormalWord {
        (0..e).fold(Self::identity(), |acc, _| acc.mul(self))
    }

    pub fn commutator(a: &FormalWord, b: &FormalWord) -> FormalWord {
        a.mul(b).mul(&a.inverse()).mul(&b.inverse())
    }

    /// `w a w⁻¹`.
    pub fn conjugate(a: &FormalWord, w: &FormalWord) -> FormalWord {
        w.mul(a).mul(&w.inverse())
    }

    /// Substitutes braids for `x` and `y`.
    pub fn instantiate(&self, x: &BraidWord, y: &BraidWord) -> Result<BraidWord> {
        let (xi, yi) = (x.inverse(), y.inverse());
        let parts = self.letters.iter().map(|&l| match l {
            1 => x,
            -1 => &xi,
            2 => y,
            _ => &yi,
        });
        BraidWord::product(x.strands(), parts)
    }
}

impl fmt::Display for FormalWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for (pos, &l) in self.letters.iter().enumerate() {
            if pos > 0 {
                f.write_str(" ")?;
            }
            f.write_str(match l {
                1 => "x",
                -1 => "x^-1",
                2 => "y",
                _ => "y^-1",
            })?;
        }
        Ok(())
    }
}

impl fmt::Debug for FormalWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FormalWord[{self}]")
    }
}

/// The `p²` conjugators `x^a y^b` (for `a = p−1, …, 0` and, inside,
/// `b = 0, …, p−1`) with `[x^p, y^p] = ∏_j c_j [x, y] c_j⁻¹`.
pub fn expand_power_commutator(p: usize) -> Result<Vec<FormalWord>> {
    if p < 2 {
        return Err(BraidError::InvalidArgument(alloc::format!(
            "expansion exponent must be at least 2, got {p}"
        )));
    }
    let (x, y) = (FormalWord::x(), FormalWord::y());
    let mut out = Vec::with_capacity(p * p);
    for a in (0..p).rev() {
        let xa = x.pow(a);
        for b in 0..p {
            out.push(xa.mul(&y.pow(b)));
        }
    }
    Ok(out)
}

/// Which branch of the construction produced the core pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CaseTag {
    /// `π(β)` is a single transposition.
    Transposition,
    /// `π(β)` is a product of `m ≥ 2` disjoint transpositions.
    DisjointTranspositions(usize),
    /// `π(β)` has a cycle of length `j ≥ 3` (the longest), `n ≥ 4`.
    LongCycle(usize),
    /// `n = 3` and `π(β)` is a 3-cycle.
    ThreeCycleN3,
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CaseTag::Transposition => f.write_str("Transposition"),
            CaseTag::DisjointTranspositions(m) => write!(f, "DisjointTranspositions({m})"),
            CaseTag::LongCycle(j) => write!(f, "LongCycle({j})"),
            CaseTag::ThreeCycleN3 => f.write_str("ThreeCycleN3"),
        }
    }
}

impl FromStr for CaseTag {
    type Err = BraidError;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || BraidError::Parse(String::from(s));
        let arg = |prefix: &str| -> Option<usize> {
            s.strip_prefix(prefix)?.strip_suffix(')')?.parse().ok()
        };
        match s {
            "Transposition" => Ok(CaseTag::Transposition),
            "ThreeCycleN3" => Ok(CaseTag::ThreeCycleN3),
            _ => arg("DisjointTranspositions(")
                .map(CaseTag::DisjointTranspositions)
                .or_else(|| arg("LongCycle(").map(CaseTag::LongCycle))
                .ok_or_else(bad),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsionCertificate {
    pub n: usize,
    pub beta: BraidWord,
    pub case: CaseTag,
    pub x: BraidWord,
    pub y: BraidWord,
    pub p: u32,
    /// The commutator `[x, y]`.
    pub g: BraidWord,
    pub conjugators: Vec<BraidWord>,
}

/// Core pair for the fixed representative of a cycle type, with the case,
/// the representative itself and the exponent.
fn core_pair(t: &CycleType) -> Result<(CaseTag, BraidWord, BraidWord, BraidWord, u32)> {
    let n = t.degree();
    let parts = t.parts();
    let rep = canonical_representative(t)?;
    let a12 = BraidWord::pure_generator(1, 2, n)?;
    let conj_by_a12 =
        |w: &BraidWord| -> Result<BraidWord> { BraidWord::product(n, [&a12, w, &a12.inverse()]) };
    if parts.iter().all(|&part| part == 2) {
        let m = parts.len();
        if m == 1 {
            // (σ1σ2²)² = (σ2²σ1)²
            let x = BraidWord::from_signed(n, &[1, 2, 2])?;
            let y = BraidWord::from_signed(n, &[2, 2, 1])?;
            return Ok((CaseTag::Transposition, rep, x, y, 2));
        }
        // (A12 Δ A12⁻¹)² = Δ², Δ² being central on the strands it spans
        let x = conj_by_a12(&rep)?;
        return Ok((CaseTag::DisjointTranspositions(m), rep.clone(), x, rep, 2));
    }
    let longest = parts[0];
    if n == 3 {
        // (σ1σ2)³ = (σ2σ1)³
        let y = BraidWord::from_signed(3, &[2, 1])?;
        return Ok((CaseTag::ThreeCycleN3, rep.clone(), rep, y, 3));
    }
    // (A12 α A12⁻¹)^j = α^j: α^j is the full twist on the first j strands
    // times blocks that commute with A12.
    let x = conj_by_a12(&rep)?;
    let p = u32::try_from(longest).expect("cycle length fits in u32");
    Ok((CaseTag::LongCycle(longest), rep.clone(), x, rep, p))
}

/// Builds the certificate for `H_β`; `β` must be non-pure on at least three
/// strands.
pub fn build_certificate(beta: &BraidWord) -> Result<TorsionCertificate> {
    let n = beta.strands();
    if n < 3 {
        return Err(BraidError::InvalidArgument(alloc::format!(
            "certificates need at least 3 strands, got {n}"
        )));
    }
    let perm = beta.permutation();
    if perm.is_identity() {
        return Err(BraidError::PureBraid);
    }
    let (case, rep, x0, y0, p) = core_pair(&perm.cycle_type())?;
    let alpha = conjugacy_witness(&rep, beta)?.conjugator;
    let move_in = |w: &BraidWord| BraidWord::product(n, [&alpha, w, &alpha.inverse()]);
    let x = move_in(&x0)?;
    let y = move_in(&y0)?;
    let g = commutator(&x, &y)?;
    let conjugators = expand_power_commutator(p as usize)?
        .iter()
        .map(|c| c.instantiate(&x, &y))
        .collect::<Result<Vec<_>>>()?;
    Ok(TorsionCertificate {
        n,
        beta: beta.clone(),
        case,
        x,
        y,
        p,
        g,
        conjugators,
    })
}

/// Certificate for a braid of `B_∞`: the braid is placed on its least strand
/// count (at least three) and handled there.
pub fn build_certificate_infinite(beta: &InfiniteBraidWord) -> Result<TorsionCertificate> {
    let embedded = beta.embed();
    if embedded.permutation().is_identity() {
        return Err(BraidError::PureBraid);
    }
    let n = embedded.strands().max(3);
    build_certificate(&embedded.with_strands(n)?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertificateCheck {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertificateReport {
    pub checks: Vec<CertificateCheck>,
}

impl CertificateReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&CertificateCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for CertificateReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(
                f,
                "{} {}: {}",
                if c.passed { "PASS" } else { "FAIL" },
                c.name,
                c.detail
            )?;
        }
        Ok(())
    }
}

pub const CHECK_ROOTS: &str = "non-unique roots";
pub const CHECK_NONTRIVIAL: &str = "nontrivial commutator";
pub const CHECK_TORSION: &str = "generalized torsion relation";
pub const CHECK_MEMBERSHIP: &str = "membership in H_beta";
pub const CHECK_COMMUTATOR: &str = "g is the commutator of x and y";

/// Re-checks every claim of a certificate from its words alone.
pub fn verify_certificate(c: &TorsionCertificate) -> CertificateReport {
    let mut checks = Vec::with_capacity(5);
    let mut push = |name: &'static str, passed: bool, detail: String| {
        checks.push(CertificateCheck {
            name,
            passed,
            detail,
        });
    };

    let words = [&c.beta, &c.x, &c.y, &c.g];
    if let Some(bad) = words
        .into_iter()
        .chain(&c.conjugators)
        .find(|w| w.strands() != c.n)
    {
        let detail = alloc::format!(
            "word on {} strands in a certificate for {}",
            bad.strands(),
            c.n
        );
        for name in [
            CHECK_ROOTS,
            CHECK_NONTRIVIAL,
            CHECK_TORSION,
            CHECK_MEMBERSHIP,
            CHECK_COMMUTATOR,
        ] {
            push(name, false, detail.clone());
        }
        return CertificateReport { checks };
    }

    let p = i64::from(c.p);
    let powers_agree = c.p >= 2 && same_element(&c.x.pow(p), &c.y.pow(p)).unwrap_or(false);
    let distinct = !same_element(&c.x, &c.y).unwrap_or(true);
    push(
        CHECK_ROOTS,
        powers_agree && distinct,
        alloc::format!("x^{} = y^{}: {powers_agree}; x != y: {distinct}", c.p, c.p),
    );

    let g_nf = normal_form(&c.g);
    push(
        CHECK_NONTRIVIAL,
        !g_nf.is_identity(),
        alloc::format!("normal form of g: {g_nf}"),
    );

    let expected = (c.p as usize) * (c.p as usize);
    let mut product = GarsideNormalForm::identity(c.n);
    for conj in &c.conjugators {
        let conj_nf = normal_form(conj);
        product = product
            .multiply(&conj_nf)
            .multiply(&g_nf)
            .multiply(&conj_nf.inverse());
    }
    let count_ok = c.conjugators.len() == expected;
    push(
        CHECK_TORSION,
        count_ok && product.is_identity(),
        alloc::format!(
            "{} conjugates (expected {expected}); product normal form: {product}",
            c.conjugators.len()
        ),
    );

    let h = subgroup_of(&c.beta);
    let outside: Vec<&str> = [("x", &c.x), ("y", &c.y), ("g", &c.g)]
        .into_iter()
        .filter(|(_, w)| !h.contains_permutation(&w.permutation()))
        .map(|(name, _)| name)
        .collect();
    let outside_conj = c
        .conjugators
        .iter()
        .filter(|w| !h.contains_permutation(&w.permutation()))
        .count();
    push(
        CHECK_MEMBERSHIP,
        !h.is_pure() && outside.is_empty() && outside_conj == 0,
        alloc::format!(
            "|<pi(beta)>| = {}; outside: {:?}; conjugators outside: {outside_conj}",
            h.order(),
            outside
        ),
    );

    let is_commutator = commutator(&c.x, &c.y)
        .and_then(|xy| same_element(&xy, &c.g))
        .unwrap_or(false);
    push(
        CHECK_COMMUTATOR,
        is_commutator,
        alloc::format!("g = xyx^-1y^-1: {is_commutator}"),
    );

    CertificateReport { checks }
}
