//! Intermediate subgroups `H_β = ⟨P_n, β⟩`.
//!
//! Since `P_n` is the kernel of the permutation map `π`, the subgroup
//! generated by `P_n` and `β` is the full preimage of the cyclic group
//! `⟨π(β)⟩ ⊂ S_n`. Membership is therefore a finite check on permutations.

use alloc::vec::Vec;

use crate::perm::{CycleType, Permutation};
use crate::word::{BraidWord, Letter};
use crate::{BraidError, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntermediateSubgroup {
    n: usize,
    generator_perm: Permutation,
    // sorted
    cyclic_elements: Vec<Permutation>,
}

impl IntermediateSubgroup {
    pub fn from_permutation(generator_perm: Permutation) -> Self {
        let mut cyclic_elements = generator_perm.powers();
        cyclic_elements.sort();
        Self {
            n: generator_perm.degree(),
            generator_perm,
            cyclic_elements,
        }
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn generator_perm(&self) -> &Permutation {
        &self.generator_perm
    }

    /// The cyclic group `⟨π(β)⟩`, sorted.
    pub fn cyclic_elements(&self) -> &[Permutation] {
        &self.cyclic_elements
    }

    /// Index of `P_n` in the subgroup.
    pub fn order(&self) -> usize {
        self.cyclic_elements.len()
    }

    /// True when the subgroup is `P_n` itself.
    pub fn is_pure(&self) -> bool {
        self.generator_perm.is_identity()
    }

    pub fn contains_permutation(&self, p: &Permutation) -> bool {
        self.cyclic_elements.binary_search(p).is_ok()
    }
}

pub fn subgroup_of(beta: &BraidWord) -> IntermediateSubgroup {
    IntermediateSubgroup::from_permutation(beta.permutation())
}

pub fn member(h: &IntermediateSubgroup, w: &BraidWord) -> Result<bool> {
    if w.strands() != h.n {
        return Err(BraidError::StrandMismatch {
            left: h.n,
            right: w.strands(),
        });
    }
    Ok(h.contains_permutation(&w.permutation()))
}

/// A positive braid with permutation `tau`: the permutation braid of `tau`,
/// obtained by bubble-sorting strands into their target positions.
pub fn lift_permutation(tau: &Permutation) -> BraidWord {
    let n = tau.degree();
    let target = tau.as_zero_based();
    // position -> strand currently there
    let mut at: Vec<usize> = (0..n).collect();
    let mut letters = Vec::new();
    while let Some(i) = (0..n.saturating_sub(1)).find(|&i| target[at[i]] > target[at[i + 1]]) {
        at.swap(i, i + 1);
        letters.push(Letter::pos(i + 1));
    }
    BraidWord::new(n.max(1), letters).expect("indices below n")
}

/// A braid `α₀` with `π(α₀ β α₀⁻¹) = π(γ)`, so that `H_γ = α₀ H_β α₀⁻¹`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyWitness {
    pub conjugator: BraidWord,
}

pub fn conjugacy_witness(beta: &BraidWord, gamma: &BraidWord) -> Result<ConjugacyWitness> {
    if beta.strands() != gamma.strands() {
        return Err(BraidError::StrandMismatch {
            left: beta.strands(),
            right: gamma.strands(),
        });
    }
    let n = beta.strands();
    let pb = beta.permutation();
    let pg = gamma.permutation();
    let (tb, tg) = (pb.cycle_type(), pg.cycle_type());
    if tb != tg {
        return Err(BraidError::CycleTypeMismatch(
            alloc::format!("{tb}"),
            alloc::format!("{tg}"),
        ));
    }
    // With products read left to right, π(α₀ β α₀⁻¹) = π(γ) means
    // π(β) ∘ a = a ∘ π(γ) for a = π(α₀): a sends each cycle of π(γ) onto a
    // cycle of π(β) of the same length, point by point.
    let by_length = |p: &Permutation| {
        let mut cycles = p.cycles();
        cycles.sort_by_key(|c| core::cmp::Reverse(c.len()));
        cycles
    };
    let (cb, cg) = (by_length(&pb), by_length(&pg));
    let mut a: Vec<Option<usize>> = alloc::vec![None; n];
    for (from, to) in cg.iter().zip(&cb) {
        for (&x, &y) in from.iter().zip(to) {
            a[x - 1] = Some(y - 1);
        }
    }
    let fixed_g = (0..n).filter(|&k| pg.as_zero_based()[k] == k);
    let fixed_b = (0..n).filter(|&k| pb.as_zero_based()[k] == k);
    for (x, y) in fixed_g.zip(fixed_b) {
        a[x] = Some(y);
    }
    let images: Vec<usize> = a
        .into_iter()
        .map(|v| v.expect("every point assigned"))
        .collect();
    let conjugator = lift_permutation(&Permutation::from_zero_based(images));
    debug_assert_eq!(
        conjugator
            .permutation()
            .then(&pb)
            .then(&conjugator.permutation().inverse()),
        pg
    );
    Ok(ConjugacyWitness { conjugator })
}

/// A fixed braid realizing the cycle type `t` on `t.degree()` strands.
///
/// Types made only of 2-cycles map to `σ1` (one transposition) or to the
/// half twist `Δ_{2m}` (`m ≥ 2` transpositions). Any other type is realized
/// by blocks of consecutive strands, longest block first, the block of
/// length `j` starting after position `s` being `σ_{s+1} ⋯ σ_{s+j−1}`.
pub fn canonical_representative(t: &CycleType) -> Result<BraidWord> {
    let n = t.degree();
    if t.is_empty() {
        return Err(BraidError::InvalidArgument(
            "empty cycle type has no representative".into(),
        ));
    }
    let parts = t.parts();
    if parts.iter().all(|&p| p == 2) {
        let m = parts.len();
        return if m == 1 {
            BraidWord::artin(1, n)
        } else {
            BraidWord::half_twist(2 * m, n)
        };
    }
    let mut letters = Vec::new();
    let mut offset = 0;
    for &len in parts {
        letters.extend((offset + 1..offset + len).map(Letter::pos));
        offset += len;
    }
    BraidWord::new(n, letters)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;

    fn w(n: usize, letters: &[i32]) -> BraidWord {
        BraidWord::from_signed(n, letters).unwrap()
    }

    #[test]
    fn cyclic_closure() {
        let h = subgroup_of(&w(3, &[1, 2]));
        let elems: Vec<_> = h.cyclic_elements().iter().map(|p| format!("{p}")).collect();
        assert_eq!(elems.len(), 3);
        for e in ["()", "(1,3,2)", "(1,2,3)"] {
            assert!(elems.iter().any(|x| x == e));
        }
        assert_eq!(
            subgroup_of(&BraidWord::pure_generator(1, 3, 3).unwrap()).order(),
            1
        );
        assert_eq!(subgroup_of(&w(3, &[1])).order(), 2);
    }

    #[test]
    fn membership() {
        let h = subgroup_of(&w(3, &[1, 2]));
        assert!(member(&h, &w(3, &[2, 1])).unwrap());
        assert!(!member(&h, &w(3, &[1])).unwrap());
        assert!(member(&h, &BraidWord::pure_generator(2, 3, 3).unwrap()).unwrap());
        assert!(member(&h, &w(4, &[1])).is_err());
    }

    #[test]
    fn lifts() {
        assert!(lift_permutation(&Permutation::identity(4)).is_empty());
        assert_eq!(
            lift_permutation(&Permutation::transposition(3, 1, 2).unwrap()),
            w(3, &[1])
        );
        let c = Permutation::from_cycles(3, &[&[1, 3, 2]]).unwrap();
        let lifted = lift_permutation(&c);
        assert_eq!(lifted.permutation(), c);
        assert!(lifted.is_positive());
    }

    #[test]
    fn witnesses() {
        let s1 = w(3, &[1]);
        assert!(conjugacy_witness(&s1, &s1).unwrap().conjugator.is_empty());
        let a = conjugacy_witness(&s1, &w(3, &[2])).unwrap().conjugator;
        let conj = crate::problem::conjugate(&s1, &a).unwrap();
        assert_eq!(conj.permutation(), w(3, &[2]).permutation());

        let a = conjugacy_witness(&w(3, &[1, 2]), &w(3, &[2, 1]))
            .unwrap()
            .conjugator;
        let conj = crate::problem::conjugate(&w(3, &[1, 2]), &a).unwrap();
        assert_eq!(format!("{}", conj.permutation()), "(1,2,3)");

        assert!(matches!(
            conjugacy_witness(&s1, &w(3, &[1, 2])),
            Err(BraidError::CycleTypeMismatch(..))
        ));
    }

    #[test]
    fn representatives() {
        let t = CycleType::new(3, &[2]).unwrap();
        assert_eq!(canonical_representative(&t).unwrap(), w(3, &[1]));
        let t = CycleType::new(4, &[2, 2]).unwrap();
        assert_eq!(
            canonical_representative(&t).unwrap(),
            w(4, &[1, 2, 1, 3, 2, 1])
        );
        let t = CycleType::new(5, &[2, 3]).unwrap();
        assert_eq!(canonical_representative(&t).unwrap(), w(5, &[1, 2, 4]));
        assert!(canonical_representative(&CycleType::new(5, &[]).unwrap()).is_err());
    }

    #[test]
    fn representatives_realize_their_type() {
        for n in 2..=7 {
            for t in CycleType::all_nontrivial(n) {
                let rep = canonical_representative(&t).unwrap();
                assert_eq!(rep.permutation().cycle_type(), t, "{t} in {n}");
            }
        }
    }
}
