#![allow(dead_code)]

use braid_core::{BraidWord, Letter};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn w(n: usize, letters: &[i32]) -> BraidWord {
    BraidWord::from_signed(n, letters).unwrap()
}

pub fn random_word(rng: &mut impl Rng, n: usize, max_len: usize) -> BraidWord {
    let len = rng.gen_range(0..=max_len);
    let letters = (0..len)
        .map(|_| Letter::new(rng.gen_range(1..n), rng.gen_bool(0.5)))
        .collect();
    BraidWord::new(n, letters).unwrap()
}

/// A word equal to `u` in `B_n`, obtained by inserting a few trivial
/// factors: free cancellations, braid relators and far commutations.
pub fn insert_relators(rng: &mut impl Rng, u: &BraidWord, count: usize) -> BraidWord {
    let n = u.strands();
    let mut letters: Vec<i32> = u.letters().iter().map(|l| signed(*l)).collect();
    for _ in 0..count {
        let at = rng.gen_range(0..=letters.len());
        let relator = random_relator(rng, n);
        letters.splice(at..at, relator);
    }
    w(n, &letters)
}

fn random_relator(rng: &mut impl Rng, n: usize) -> Vec<i32> {
    let i = rng.gen_range(1..n) as i32;
    let e = if rng.gen_bool(0.5) { 1 } else { -1 };
    let kind = rng.gen_range(0..3);
    let mut r = match kind {
        0 => vec![e * i, -e * i],
        1 if (i as usize) + 1 < n => {
            let j = i + 1;
            vec![i, j, i, -j, -i, -j]
        }
        2 if (i as usize) + 2 < n => {
            let j = rng.gen_range(i + 2..n as i32);
            vec![i, j, -i, -j]
        }
        _ => vec![-e * i, e * i],
    };
    if rng.gen_bool(0.5) {
        r = r.into_iter().rev().map(|x| -x).collect();
    }
    r
}

pub fn signed(l: Letter) -> i32 {
    let i = l.index() as i32;
    if l.is_positive() {
        i
    } else {
        -i
    }
}

/// A random product of pure generators `A_{i,j}^{±1}`.
pub fn random_pure(rng: &mut impl Rng, n: usize, factors: usize) -> BraidWord {
    let mut out = BraidWord::identity(n);
    for _ in 0..factors {
        let i = rng.gen_range(1..n);
        let j = rng.gen_range(i + 1..=n);
        let mut a = BraidWord::pure_generator(i, j, n).unwrap();
        if rng.gen_bool(0.5) {
            a = a.inverse();
        }
        out = out.concat(&a).unwrap();
    }
    out
}
