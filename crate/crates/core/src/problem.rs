//! Equality in `B_n` and the commutator/conjugate word builders.

use crate::garside::{normal_form, GarsideNormalForm};
use crate::word::BraidWord;
use crate::{BraidError, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EqualityVerdict {
    pub equal: bool,
    pub left_normal_form: GarsideNormalForm,
    pub right_normal_form: GarsideNormalForm,
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

pub fn equal(u: &BraidWord, v: &BraidWord) -> Result<EqualityVerdict> {
    check_strands(u, v)?;
    let left_normal_form = normal_form(u);
    let right_normal_form = normal_form(v);
    Ok(EqualityVerdict {
        equal: left_normal_form == right_normal_form,
        left_normal_form,
        right_normal_form,
    })
}

/// Shorthand for `equal(u, v)?.equal`.
pub fn same_element(u: &BraidWord, v: &BraidWord) -> Result<bool> {
    check_strands(u, v)?;
    Ok(normal_form(u) == normal_form(v))
}

pub fn is_trivial(u: &BraidWord) -> bool {
    normal_form(u).is_identity()
}

/// The literal word `x y x⁻¹ y⁻¹`.
pub fn commutator(x: &BraidWord, y: &BraidWord) -> Result<BraidWord> {
    check_strands(x, y)?;
    x.concat(y)?.concat(&x.inverse())?.concat(&y.inverse())
}

/// The literal word `w x w⁻¹`.
pub fn conjugate(x: &BraidWord, w: &BraidWord) -> Result<BraidWord> {
    check_strands(x, w)?;
    w.concat(x)?.concat(&w.inverse())
}
