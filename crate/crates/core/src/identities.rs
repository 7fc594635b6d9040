//! Batch verification of the braid identities the certificates rely on.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::perm::{CycleType, Permutation};
use crate::problem::{commutator, is_trivial, same_element};
use crate::subgroup::canonical_representative;
use crate::word::BraidWord;
use crate::{BraidError, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub identity: &'static str,
    pub parameters: String,
    pub passed: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IdentityReport {
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn count(&self, identity: &str) -> usize {
        self.checks
            .iter()
            .filter(|c| c.identity == identity)
            .count()
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(
                f,
                "{} {} [{}]",
                if c.passed { "PASS" } else { "FAIL" },
                c.identity,
                c.parameters
            )?;
        }
        let failed = self.failures().count();
        write!(f, "{} checks, {} failed", self.checks.len(), failed)
    }
}

pub const SQUARE_ROOTS_B3: &str = "(s1 s2^2)^2 = (s2^2 s1)^2";
pub const CUBE_ROOTS_B3: &str = "(s1 s2)^3 = (s2 s1)^3";
pub const HALF_TWIST_SQUARE_ROOTS: &str = "(A12 D_i A12^-1)^2 = D_i^2";
pub const HALF_TWIST_EXCHANGE: &str = "s_i D_k = D_k s_(k-i)";
pub const FULL_TWIST_CENTRAL: &str = "D_n^2 commutes with s_i";
pub const FULL_TWIST_FORMULA: &str = "D_n^2 = (s1...s_(n-1))^n";
pub const CYCLE_ROOTS: &str = "(A12 alpha A12^-1)^j1 = alpha^j1";
pub const HALF_TWIST_PERMUTATION: &str = "pi(D_k) = prod (l, k+1-l)";

fn w(n: usize, letters: &[i32]) -> Result<BraidWord> {
    BraidWord::from_signed(n, letters)
}

/// Runs every identity for all parameters up to `n_max` strands (the
/// half-twist permutation check goes to `n_max + 1`).
pub fn run_identity_suite(n_max: usize) -> Result<IdentityReport> {
    if n_max < 3 {
        return Err(BraidError::InvalidArgument(alloc::format!(
            "identity suite needs n_max >= 3, got {n_max}"
        )));
    }
    let mut report = IdentityReport::default();
    let mut record = |identity: &'static str, parameters: String, passed: bool| {
        report.checks.push(IdentityCheck {
            identity,
            parameters,
            passed,
        });
    };

    record(
        SQUARE_ROOTS_B3,
        "n=3".into(),
        same_element(&w(3, &[1, 2, 2])?.pow(2), &w(3, &[2, 2, 1])?.pow(2))?,
    );
    record(
        CUBE_ROOTS_B3,
        "n=3".into(),
        same_element(&w(3, &[1, 2])?.pow(3), &w(3, &[2, 1])?.pow(3))?,
    );

    for i in 3..=n_max {
        let a12 = BraidWord::pure_generator(1, 2, i)?;
        let delta = BraidWord::half_twist(i, i)?;
        let x = BraidWord::product(i, [&a12, &delta, &a12.inverse()])?;
        record(
            HALF_TWIST_SQUARE_ROOTS,
            alloc::format!("i={i}"),
            same_element(&x.pow(2), &delta.pow(2))?,
        );
    }

    for k in 2..=n_max {
        let delta = BraidWord::half_twist(k, n_max)?;
        for i in 1..k {
            let lhs = BraidWord::artin(i, n_max)?.compose(&delta)?;
            let rhs = delta.compose(&BraidWord::artin(k - i, n_max)?)?;
            record(
                HALF_TWIST_EXCHANGE,
                alloc::format!("i={i} k={k} n={n_max}"),
                same_element(&lhs, &rhs)?,
            );
        }
    }

    for n in 3..=n_max {
        let twist = BraidWord::full_twist(n)?;
        for i in 1..n {
            let c = commutator(&twist, &BraidWord::artin(i, n)?)?;
            record(
                FULL_TWIST_CENTRAL,
                alloc::format!("n={n} i={i}"),
                is_trivial(&c),
            );
        }
        let squared = BraidWord::half_twist(n, n)?.pow(2);
        record(
            FULL_TWIST_FORMULA,
            alloc::format!("n={n}"),
            same_element(&squared, &twist)?,
        );
    }

    for n in 3..=n_max {
        for t in CycleType::all_nontrivial(n) {
            let j1 = t.parts()[0];
            if j1 < 3 {
                continue;
            }
            let alpha = canonical_representative(&t)?;
            let a12 = BraidWord::pure_generator(1, 2, n)?;
            let x = BraidWord::product(n, [&a12, &alpha, &a12.inverse()])?;
            let j = j1 as i64;
            record(
                CYCLE_ROOTS,
                alloc::format!("type={t} n={n}"),
                same_element(&x.pow(j), &alpha.pow(j))?,
            );
        }
    }

    for k in 2..=n_max + 1 {
        let pairs: Vec<[usize; 2]> = (1..=k / 2).map(|l| [l, k + 1 - l]).collect();
        let cycles: Vec<&[usize]> = pairs.iter().map(|c| c.as_slice()).collect();
        let expected = Permutation::from_cycles(k, &cycles)?;
        let actual = BraidWord::half_twist(k, k)?.permutation();
        record(
            HALF_TWIST_PERMUTATION,
            alloc::format!("k={k}"),
            actual == expected,
        );
    }

    Ok(report)
}
