//! Subgroups of `S_n` up to conjugacy, for small `n`.
//!
//! Intermediate subgroups `P_n ⊂ H ⊂ B_n` are exactly the preimages of
//! subgroups of `S_n`, and conjugate subgroups have conjugate preimages, so
//! one descriptor per conjugacy class covers every intermediate subgroup up
//! to conjugacy.
//!
//! Every subgroup is reached from a smaller one by adjoining a single
//! element, so a search that joins each class representative with one
//! element from each of its right cosets finds all classes.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::perm::Permutation;
use crate::subgroup::lift_permutation;
use crate::word::BraidWord;
use crate::{BraidError, Result};

/// One conjugacy class of subgroups `K ⊂ S_n`, standing for the intermediate
/// subgroup `π⁻¹(K)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupDescriptor {
    pub n: usize,
    pub order: usize,
    pub generators: Vec<Permutation>,
    /// Positive lifts of `generators`; together with `P_n` they generate the
    /// preimage.
    pub generator_braids: Vec<BraidWord>,
    // sorted
    elements: Vec<Permutation>,
}

impl SubgroupDescriptor {
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    /// The trivial subgroup, whose preimage is `P_n` itself.
    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    /// All of `S_n`, whose preimage is `B_n`.
    pub fn is_full(&self) -> bool {
        self.order == factorial(self.n)
    }
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

struct SymmetricGroup {
    elements: Vec<Permutation>,
    // table[a * size + b] = index of (a then b)
    table: Vec<u16>,
    inverse: Vec<usize>,
}

impl SymmetricGroup {
    fn new(n: usize) -> Self {
        let mut elements = Vec::new();
        let mut current: Vec<usize> = (0..n).collect();
        loop {
            elements.push(Permutation::from_zero_based(current.clone()));
            if !next_permutation(&mut current) {
                break;
            }
        }
        let index: BTreeMap<Vec<usize>, usize> = elements
            .iter()
            .enumerate()
            .map(|(k, p)| (p.as_zero_based().to_vec(), k))
            .collect();
        let size = elements.len();
        let mut table = alloc::vec![0u16; size * size];
        for (a, pa) in elements.iter().enumerate() {
            for (b, pb) in elements.iter().enumerate() {
                table[a * size + b] = index[pa.then(pb).as_zero_based()] as u16;
            }
        }
        let inverse = elements
            .iter()
            .map(|p| index[p.inverse().as_zero_based()])
            .collect();
        Self {
            elements,
            table,
            inverse,
        }
    }

    fn size(&self) -> usize {
        self.elements.len()
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.size() + b] as usize
    }

    fn identity(&self) -> usize {
        0
    }

    fn closure(&self, gens: &[usize]) -> Bits {
        let mut set = Bits::new(self.size());
        let mut frontier = alloc::vec![self.identity()];
        set.insert(self.identity());
        while let Some(e) = frontier.pop() {
            for &g in gens {
                let p = self.mul(e, g);
                if set.insert(p) {
                    frontier.push(p);
                }
            }
        }
        set
    }

    fn conjugate(&self, set: &Bits, c: usize) -> Bits {
        let ci = self.inverse[c];
        let mut out = Bits::new(self.size());
        for x in set.iter() {
            out.insert(self.mul(self.mul(ci, x), c));
        }
        out
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len())
        .rev()
        .find(|&j| v[j] > v[i - 1])
        .expect("pivot exists");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Bits {
    words: Vec<u64>,
}

impl Bits {
    fn new(size: usize) -> Self {
        Self {
            words: alloc::vec![0; size.div_ceil(64)],
        }
    }

    fn insert(&mut self, k: usize) -> bool {
        let (w, b) = (k / 64, 1u64 << (k % 64));
        let fresh = self.words[w] & b == 0;
        self.words[w] |= b;
        fresh
    }

    fn contains(&self, k: usize) -> bool {
        self.words[k / 64] & (1u64 << (k % 64)) != 0
    }

    fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(w, &bits)| {
            (0..64)
                .filter(move |b| bits & (1u64 << b) != 0)
                .map(move |b| w * 64 + b)
        })
    }
}

struct Representative {
    members: Bits,
    gens: Vec<usize>,
}

/// One descriptor per conjugacy class of subgroups of `S_n`, ordered by
/// subgroup order; `3 ≤ n ≤ 6`.
pub fn enumerate_intermediate(n: usize) -> Result<Vec<SubgroupDescriptor>> {
    if !(3..=6).contains(&n) {
        return Err(BraidError::InvalidArgument(alloc::format!(
            "subgroup enumeration supports 3 <= n <= 6, got {n}"
        )));
    }
    let group = SymmetricGroup::new(n);
    let size = group.size();

    let mut class_of: BTreeMap<Bits, usize> = BTreeMap::new();
    let mut reps: Vec<Representative> = Vec::new();
    let mut register = |members: Bits, gens: Vec<usize>, reps: &mut Vec<Representative>| {
        if class_of.contains_key(&members) {
            return;
        }
        let id = reps.len();
        for c in 0..size {
            class_of.entry(group.conjugate(&members, c)).or_insert(id);
        }
        reps.push(Representative { members, gens });
    };

    register(group.closure(&[]), Vec::new(), &mut reps);
    let mut next = 0;
    while next < reps.len() {
        let members = reps[next].members.clone();
        let gens = reps[next].gens.clone();
        // ⟨H, g⟩ depends only on the right coset Hg.
        let mut covered = Bits::new(size);
        for h in members.iter() {
            covered.insert(h);
        }
        for g in 0..size {
            if covered.contains(g) {
                continue;
            }
            for h in members.iter() {
                covered.insert(group.mul(h, g));
            }
            let mut joined = gens.clone();
            joined.push(g);
            register(group.closure(&joined), joined, &mut reps);
        }
        next += 1;
    }

    let mut out: Vec<SubgroupDescriptor> = reps
        .into_iter()
        .map(|rep| {
            let generators: Vec<Permutation> = rep
                .gens
                .iter()
                .map(|&g| group.elements[g].clone())
                .collect();
            let generator_braids = generators.iter().map(lift_permutation).collect();
            let mut elements: Vec<Permutation> = rep
                .members
                .iter()
                .map(|k| group.elements[k].clone())
                .collect();
            elements.sort();
            SubgroupDescriptor {
                n,
                order: rep.members.len(),
                generators,
                generator_braids,
                elements,
            }
        })
        .collect();
    out.sort_by_key(|d| d.order);
    Ok(out)
}
