mod common;

use braid_core::{
    dehornoy_compare, member, partial_compare, subgroup_of, BraidWord, OrderVerdict, PartialVerdict,
};
use common::{random_word, rng, w};
use rand::Rng;

fn cmp(u: &BraidWord, v: &BraidWord) -> OrderVerdict {
    dehornoy_compare(u, v).unwrap()
}

fn flip(v: OrderVerdict) -> OrderVerdict {
    match v {
        OrderVerdict::Less => OrderVerdict::Greater,
        OrderVerdict::Greater => OrderVerdict::Less,
        OrderVerdict::Equal => OrderVerdict::Equal,
    }
}

#[test]
fn dehornoy_is_a_strict_total_order() {
    let mut r = rng(21);
    for _ in 0..500 {
        let n = r.gen_range(2..=5);
        let (u, v, x) = (
            random_word(&mut r, n, 10),
            random_word(&mut r, n, 10),
            random_word(&mut r, n, 10),
        );
        assert_eq!(cmp(&u, &u), OrderVerdict::Equal);
        let uv = cmp(&u, &v);
        assert_eq!(cmp(&v, &u), flip(uv), "{u:?} {v:?}");
        assert_eq!(
            uv == OrderVerdict::Equal,
            braid_core::equal(&u, &v).unwrap().equal
        );
        if uv == OrderVerdict::Less && cmp(&v, &x) == OrderVerdict::Less {
            assert_eq!(cmp(&u, &x), OrderVerdict::Less);
        }
        if uv == OrderVerdict::Greater && cmp(&v, &x) == OrderVerdict::Greater {
            assert_eq!(cmp(&u, &x), OrderVerdict::Greater);
        }
    }
}

#[test]
fn dehornoy_is_left_invariant() {
    let mut r = rng(22);
    for _ in 0..250 {
        let n = r.gen_range(2..=5);
        let (u, v, c) = (
            random_word(&mut r, n, 10),
            random_word(&mut r, n, 10),
            random_word(&mut r, n, 10),
        );
        let shifted = cmp(&c.compose(&u).unwrap(), &c.compose(&v).unwrap());
        assert_eq!(shifted, cmp(&u, &v));
    }
}

/// All words of length at most `len` in `B_3`.
fn short_words(len: usize) -> Vec<BraidWord> {
    let mut layer = vec![Vec::<i32>::new()];
    let mut all = layer.clone();
    for _ in 0..len {
        layer = layer
            .iter()
            .flat_map(|s| [1, -1, 2, -2].map(|l| [s.as_slice(), &[l]].concat()))
            .filter(|s| s.len() < 2 || s[s.len() - 1] != -s[s.len() - 2])
            .collect();
        all.extend(layer.iter().cloned());
    }
    all.into_iter().map(|s| w(3, &s)).collect()
}

#[test]
fn dehornoy_is_not_right_invariant() {
    // u < v but u c > v c for some c: shortest words first
    let words = short_words(3);
    let found = words.iter().find_map(|u| {
        words.iter().find_map(|v| {
            if cmp(u, v) != OrderVerdict::Less {
                return None;
            }
            words
                .iter()
                .find(|c| {
                    cmp(&u.compose(c).unwrap(), &v.compose(c).unwrap()) == OrderVerdict::Greater
                })
                .map(|c| (u.clone(), v.clone(), c.clone()))
        })
    });
    let (u, v, c) = found.expect("a right-invariance failure among words of length <= 3");
    assert!(u.len() + v.len() + c.len() <= 18);
    assert_eq!(cmp(&u, &v), OrderVerdict::Less);
    assert_eq!(
        cmp(&u.compose(&c).unwrap(), &v.compose(&c).unwrap()),
        OrderVerdict::Greater
    );
}

#[test]
fn explicit_right_invariance_failure() {
    // 1 < σ1σ2⁻¹, but σ1⁻¹ > σ1σ2⁻¹σ1⁻¹ since σ1²σ2⁻¹σ1⁻¹ = σ2⁻¹σ1⁻¹σ2²
    let (u, v) = (BraidWord::identity(3), w(3, &[1, -2]));
    assert_eq!(cmp(&u, &v), OrderVerdict::Less);
    let c = w(3, &[-1]);
    let (uc, vc) = (u.compose(&c).unwrap(), v.compose(&c).unwrap());
    assert_eq!(cmp(&uc, &vc), OrderVerdict::Greater);
}

fn pcmp(u: &BraidWord, v: &BraidWord) -> PartialVerdict {
    partial_compare(u, v).unwrap()
}

fn check_partial_axioms(samples: &[(BraidWord, BraidWord, BraidWord, BraidWord)]) {
    for (u, v, x, c) in samples {
        assert_ne!(pcmp(u, u), PartialVerdict::Less);
        assert_ne!(pcmp(u, u), PartialVerdict::Greater);
        if pcmp(u, v) == PartialVerdict::Less && pcmp(v, x) == PartialVerdict::Less {
            assert_eq!(pcmp(u, x), PartialVerdict::Less);
        }
        let before = pcmp(u, v);
        let left = pcmp(&c.compose(u).unwrap(), &c.compose(v).unwrap());
        let right = pcmp(&u.compose(c).unwrap(), &v.compose(c).unwrap());
        let conj = pcmp(
            &braid_core::conjugate(u, c).unwrap(),
            &braid_core::conjugate(v, c).unwrap(),
        );
        for after in [left, right, conj] {
            // Equal and Incomparable are both "not strictly comparable"
            let strict =
                |p: PartialVerdict| matches!(p, PartialVerdict::Less | PartialVerdict::Greater);
            assert_eq!(strict(after), strict(before));
            if strict(before) {
                assert_eq!(after, before);
            }
        }
    }
}

#[test]
fn partial_order_axioms_in_b4() {
    let mut r = rng(23);
    let samples: Vec<_> = (0..500)
        .map(|_| {
            (
                random_word(&mut r, 4, 10),
                random_word(&mut r, 4, 10),
                random_word(&mut r, 4, 10),
                random_word(&mut r, 4, 10),
            )
        })
        .collect();
    check_partial_axioms(&samples);
}

#[test]
fn partial_order_axioms_in_intermediate_subgroup() {
    let h = subgroup_of(&w(4, &[1]));
    let mut r = rng(24);
    let mut draw = || loop {
        let u = random_word(&mut r, 4, 10);
        if member(&h, &u).unwrap() {
            return u;
        }
    };
    let samples: Vec<_> = (0..500).map(|_| (draw(), draw(), draw(), draw())).collect();
    check_partial_axioms(&samples);
}

#[test]
fn equal_sum_distinct_braids_are_incomparable() {
    assert_eq!(
        pcmp(&w(4, &[1, -2]), &w(4, &[3, -3])),
        PartialVerdict::Incomparable
    );
    assert_eq!(
        pcmp(&w(4, &[1, 2, 1]), &w(4, &[2, 1, 2])),
        PartialVerdict::Equal
    );
}
