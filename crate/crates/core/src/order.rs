//! The Dehornoy left order, the exponent-sum partial bi-order, and the
//! unique-root test.
//!
//! `u < v` in the Dehornoy order when `u⁻¹v` is σ-positive. The partial
//! order compares exponent sums; its positive cone is the preimage of the
//! positive integers under the abelianization, which is invariant under
//! conjugation, so the order is invariant on both sides. The same comparison
//! serves every intermediate subgroup, since each contains the pure braids
//! and therefore elements of every even exponent sum.

use core::cmp::Ordering;

use crate::handle::sigma_sign;
use crate::problem::same_element;
use crate::word::BraidWord;
use crate::{BraidError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderVerdict {
    Less,
    Equal,
    Greater,
}

impl From<Ordering> for OrderVerdict {
    fn from(o: Ordering) -> Self {
        match o {
            Ordering::Less => OrderVerdict::Less,
            Ordering::Equal => OrderVerdict::Equal,
            Ordering::Greater => OrderVerdict::Greater,
        }
    }
}

impl From<OrderVerdict> for Ordering {
    fn from(v: OrderVerdict) -> Self {
        match v {
            OrderVerdict::Less => Ordering::Less,
            OrderVerdict::Equal => Ordering::Equal,
            OrderVerdict::Greater => Ordering::Greater,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PartialVerdict {
    Less,
    Greater,
    Equal,
    Incomparable,
}

fn check_strands(u: &BraidWord, v: &BraidWord) -> Result<()> {
    if u.strands() != v.strands() {
        return Err(BraidError::StrandMismatch {
            left: u.strands(),
            right: v.strands(),
        });
    }
    Ok(())
}

/// Dehornoy order: σ-positive braids are greater than the identity.
pub fn dehornoy_compare(u: &BraidWord, v: &BraidWord) -> Result<OrderVerdict> {
    check_strands(u, v)?;
    let quotient = u.inverse().compose(v)?;
    // u⁻¹v > 1  ⇔  u < v
    Ok(sigma_sign(&quotient)?.reverse().into())
}

/// Exponent-sum partial order.
pub fn partial_compare(u: &BraidWord, v: &BraidWord) -> Result<PartialVerdict> {
    check_strands(u, v)?;
    Ok(match u.exponent_sum().cmp(&v.exponent_sum()) {
        Ordering::Less => PartialVerdict::Less,
        Ordering::Greater => PartialVerdict::Greater,
        Ordering::Equal if same_element(u, v)? => PartialVerdict::Equal,
        Ordering::Equal => PartialVerdict::Incomparable,
    })
}

/// Whether `x^p = y^p` while `x ≠ y`, i.e. `(x, y, p)` breaks unique roots.
pub fn root_clash(x: &BraidWord, y: &BraidWord, p: u32) -> Result<bool> {
    if p < 2 {
        return Err(BraidError::InvalidArgument(alloc::format!(
            "root exponent must be at least 2, got {p}"
        )));
    }
    check_strands(x, y)?;
    let p = i64::from(p);
    Ok(same_element(&x.pow(p), &y.pow(p))? && !same_element(x, y)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, letters: &[i32]) -> BraidWord {
        BraidWord::from_signed(n, letters).unwrap()
    }

    #[test]
    fn dehornoy_basics() {
        let id = BraidWord::identity(3);
        assert_eq!(
            dehornoy_compare(&id, &w(3, &[1])).unwrap(),
            OrderVerdict::Less
        );
        assert_eq!(
            dehornoy_compare(&w(3, &[-1]), &id).unwrap(),
            OrderVerdict::Less
        );
        // σ2⁻¹σ1 is σ-positive, so σ2 < σ1.
        assert_eq!(
            dehornoy_compare(&w(3, &[2]), &w(3, &[1])).unwrap(),
            OrderVerdict::Less
        );
        assert_eq!(
            dehornoy_compare(&w(3, &[1, 2, 1]), &w(3, &[2, 1, 2])).unwrap(),
            OrderVerdict::Equal
        );
    }

    #[test]
    fn partial_basics() {
        assert_eq!(
            partial_compare(&w(3, &[1]), &w(3, &[1, 2])).unwrap(),
            PartialVerdict::Less
        );
        assert_eq!(
            partial_compare(&w(3, &[1]), &w(3, &[2])).unwrap(),
            PartialVerdict::Incomparable
        );
        let a12 = BraidWord::pure_generator(1, 2, 3).unwrap();
        assert_eq!(partial_compare(&a12, &a12).unwrap(), PartialVerdict::Equal);
        assert_eq!(
            partial_compare(&w(3, &[1, 1]), &w(3, &[2])).unwrap(),
            PartialVerdict::Greater
        );
    }

    #[test]
    fn root_clashes() {
        assert!(root_clash(&w(3, &[1, 2, 2]), &w(3, &[2, 2, 1]), 2).unwrap());
        assert!(root_clash(&w(3, &[1, 2]), &w(3, &[2, 1]), 3).unwrap());
        assert!(!root_clash(&w(3, &[1]), &w(3, &[1]), 2).unwrap());
        assert!(root_clash(&w(3, &[1]), &w(3, &[2]), 1).is_err());
    }

    #[test]
    fn mismatched_strands() {
        assert!(dehornoy_compare(&w(3, &[1]), &w(4, &[1])).is_err());
        assert!(partial_compare(&w(3, &[1]), &w(4, &[1])).is_err());
    }
}
