//! Dehornoy handle reduction.
//!
//! A `σ_i`-handle is a factor `σ_i^e u σ_i^{-e}` in which every letter of
//! `u` has index greater than `i`. Reducing it deletes the two outer letters
//! and replaces each `σ_{i+1}^d` of `u` by `σ_{i+1}^{-e} σ_i^d σ_{i+1}^e`.
//! The procedure always reduces the handle whose right end comes first; such
//! a handle contains no other handle, so the reduction terminates. A word
//! with no handle left is empty, σ-positive (its lowest generator occurs only
//! positively) or σ-negative, which decides both triviality and the sign
//! used by the Dehornoy order.
//!
//! This module deliberately shares nothing with the Garside code so that the
//! two deciders can check each other.

use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::word::{BraidWord, Letter};
use crate::{BraidError, Result};

/// Step budget per word. Handle reduction terminates on every input, so
/// hitting it indicates a defect rather than a hard instance.
pub const DEFAULT_STEP_BUDGET: usize = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HandleReduction {
    pub word: BraidWord,
    pub steps: usize,
}

impl HandleReduction {
    /// `Greater` for a σ-positive result, `Less` for σ-negative, `Equal`
    /// for the empty word.
    pub fn sign(&self) -> Ordering {
        match self.word.letters().iter().min_by_key(|l| l.index()) {
            None => Ordering::Equal,
            Some(l) if l.is_positive() => Ordering::Greater,
            Some(_) => Ordering::Less,
        }
    }
}

/// Locates the handle with the leftmost right end, searching right ends from
/// `from` onwards. Returns `(start, end)` inclusive.
fn first_handle(w: &[i32], from: usize) -> Option<(usize, usize)> {
    for end in from..w.len() {
        let closing = w[end];
        let i = closing.abs();
        for start in (0..end).rev() {
            let a = w[start].abs();
            if a < i {
                break;
            }
            if a == i {
                if w[start] == -closing {
                    return Some((start, end));
                }
                break;
            }
        }
    }
    None
}

/// Fully handle-reduces `word` within `budget` steps.
pub fn handle_reduce(word: &BraidWord, budget: usize) -> Result<HandleReduction> {
    let mut w: Vec<i32> = word.letters().iter().map(|l| l.signed()).collect();
    let mut steps = 0;
    let mut resume = 0;
    while let Some((start, end)) = first_handle(&w, resume) {
        if steps == budget {
            return Err(BraidError::StepBudgetExceeded(budget));
        }
        steps += 1;
        let e = w[start].signum();
        let i = w[start].abs();
        let mut replacement = Vec::with_capacity(3 * (end - start));
        for &l in &w[start + 1..end] {
            if l.abs() == i + 1 {
                replacement.extend([-e * (i + 1), l.signum() * i, e * (i + 1)]);
            } else {
                replacement.push(l);
            }
        }
        w.splice(start..=end, replacement);
        resume = start;
    }
    let letters = w.into_iter().map(Letter::from_signed).collect();
    Ok(HandleReduction {
        word: BraidWord::from_letters_unchecked(word.strands(), letters),
        steps,
    })
}

/// Whether `word` is the identity, decided by handle reduction alone.
pub fn handle_reduce_trivial(word: &BraidWord) -> Result<bool> {
    Ok(handle_reduce(word, DEFAULT_STEP_BUDGET)?.word.is_empty())
}

/// σ-sign of `word`: `Greater` if it represents a σ-positive braid.
pub fn sigma_sign(word: &BraidWord) -> Result<Ordering> {
    Ok(handle_reduce(word, DEFAULT_STEP_BUDGET)?.sign())
}
