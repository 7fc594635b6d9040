//! Acceptance criteria, one PASS/FAIL line each. Randomized criteria use a
//! fixed seed, overridable with `ACCEPTANCE_SEED`.

use std::io::Cursor;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use braid_cli::{run, Cli};
use braid_core::{
    build_certificate, canonical_representative, commutator, dehornoy_compare,
    expand_power_commutator, handle_reduce_trivial, is_trivial, partial_compare, subgroup_of,
    verify_certificate, BraidWord, CycleType, FormalWord, Letter, OrderVerdict, PartialVerdict,
};
use clap::Parser;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

const IDENTITY_BUDGET: Duration = Duration::from_secs(10);
const SCAN_BUDGET: Duration = Duration::from_secs(60);

struct Verdict {
    passed: bool,
    detail: String,
}

fn verdict(passed: bool, detail: impl Into<String>) -> Verdict {
    Verdict {
        passed,
        detail: detail.into(),
    }
}

fn w(n: usize, letters: &[i32]) -> BraidWord {
    BraidWord::from_signed(n, letters).unwrap()
}

fn same(u: &BraidWord, v: &BraidWord) -> bool {
    braid_core::equal(u, v).unwrap().equal
}

fn random_word(rng: &mut StdRng, n: usize, max_len: usize) -> BraidWord {
    let len = rng.gen_range(0..=max_len);
    let letters = (0..len)
        .map(|_| Letter::new(rng.gen_range(1..n), rng.gen_bool(0.5)))
        .collect();
    BraidWord::new(n, letters).unwrap()
}

fn random_pure(rng: &mut StdRng, n: usize, factors: usize) -> BraidWord {
    let mut out = BraidWord::identity(n);
    for _ in 0..factors {
        let i = rng.gen_range(1..n);
        let j = rng.gen_range(i + 1..=n);
        let a = BraidWord::pure_generator(i, j, n).unwrap();
        out = out
            .concat(&if rng.gen_bool(0.5) { a } else { a.inverse() })
            .unwrap();
    }
    out
}

fn insert_relator(rng: &mut StdRng, u: &BraidWord) -> BraidWord {
    let n = u.strands();
    let i = rng.gen_range(1..n) as i32;
    let relator: Vec<i32> = match rng.gen_range(0..3) {
        1 if (i as usize) + 1 < n => vec![i, i + 1, i, -(i + 1), -i, -(i + 1)],
        2 if (i as usize) + 2 < n => {
            let j = rng.gen_range(i + 2..n as i32);
            vec![i, j, -i, -j]
        }
        _ => vec![i, -i],
    };
    let mut letters: Vec<i32> = u
        .letters()
        .iter()
        .map(|l| {
            if l.is_positive() {
                l.index() as i32
            } else {
                -(l.index() as i32)
            }
        })
        .collect();
    let at = rng.gen_range(0..=letters.len());
    letters.splice(at..at, relator);
    w(n, &letters)
}

fn cli(args: &[&str]) -> (i32, String) {
    let cli = Cli::try_parse_from(std::iter::once("braid").chain(args.iter().copied())).unwrap();
    let out = run(&cli, &mut Cursor::new(Vec::new()));
    (out.code, out.stdout)
}

fn identity_suite() -> Verdict {
    let start = Instant::now();
    let (code, text) = cli(&["identities", "--n-max", "7"]);
    let elapsed = start.elapsed();
    let failures = text.lines().filter(|l| l.starts_with("FAIL")).count();
    let checks = text
        .lines()
        .filter(|l| l.starts_with("PASS") || l.starts_with("FAIL"))
        .count();
    // 1 + 1 + 5 + 21 + 20 + 5 + 25 + 7 entries for n_max = 7
    let expected = 85;
    verdict(
        code == 0 && failures == 0 && checks == expected && elapsed <= IDENTITY_BUDGET,
        format!("{checks} checks (expected {expected}), {failures} failed, {elapsed:.2?}"),
    )
}

fn non_commutation() -> Verdict {
    let mut failures = Vec::new();
    for i in 3..=6 {
        let a12 = BraidWord::pure_generator(1, 2, i).unwrap();
        let c = commutator(&a12, &BraidWord::half_twist(i, i).unwrap()).unwrap();
        if is_trivial(&c) {
            failures.push(format!("[A12, D_{i}] = 1"));
        }
    }
    for i in 2..=5 {
        let n = i + 1;
        let a12 = BraidWord::pure_generator(1, 2, n).unwrap();
        let a13 = BraidWord::pure_generator(1, 3, n).unwrap();
        let cycle = BraidWord::new(n, (1..=i).map(Letter::pos).collect()).unwrap();
        let lhs = commutator(&a12, &cycle).unwrap();
        let s1 = w(n, &[1]);
        let rhs = BraidWord::product(n, [&s1, &a12, &a13.inverse(), &s1.inverse()]).unwrap();
        if !same(&lhs, &rhs) || is_trivial(&lhs) {
            failures.push(format!("[A12, s1...s{i}]"));
        }
    }
    verdict(
        failures.is_empty(),
        format!("8 cases, failures: {failures:?}"),
    )
}

fn witness_exhaustion() -> Verdict {
    let start = Instant::now();
    let mut counts = Vec::new();
    let mut failures = Vec::new();
    for n in 3..=6 {
        let types = CycleType::all_nontrivial(n);
        counts.push(types.len());
        for t in types {
            let ok = canonical_representative(&t)
                .and_then(|beta| build_certificate(&beta))
                .map(|c| {
                    let report = verify_certificate(&c);
                    report.checks.len() == 5 && report.all_passed()
                })
                .unwrap_or(false);
            if !ok {
                failures.push(format!("{t} in B_{n}"));
            }
        }
    }
    let elapsed = start.elapsed();
    verdict(
        counts == [2, 4, 6, 10] && failures.is_empty() && elapsed <= SCAN_BUDGET,
        format!("types per n {counts:?}, failures {failures:?}, {elapsed:.2?}"),
    )
}

fn cross_oracle(rng: &mut StdRng) -> Verdict {
    let mut disagreements = 0;
    let (mut words, mut pairs) = (0, 0);
    for _ in 0..1200 {
        let n = rng.gen_range(2..=5);
        let u = random_word(rng, n, 16);
        words += 1;
        if is_trivial(&u) != handle_reduce_trivial(&u).unwrap() {
            disagreements += 1;
        }
    }
    for _ in 0..300 {
        let n = rng.gen_range(2..=5);
        let u = random_word(rng, n, 14);
        let v = insert_relator(rng, &u);
        pairs += 1;
        let quotient = u.inverse().compose(&v).unwrap();
        let garside = is_trivial(&quotient);
        if garside != handle_reduce_trivial(&quotient).unwrap() || !garside {
            disagreements += 1;
        }
    }
    verdict(
        disagreements == 0,
        format!("{words} words, {pairs} relator pairs, {disagreements} disagreements"),
    )
}

fn short_words_b3(len: usize) -> Vec<BraidWord> {
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

fn dehornoy(rng: &mut StdRng) -> Verdict {
    let cmp = |u: &BraidWord, v: &BraidWord| dehornoy_compare(u, v).unwrap();
    let mut violations = 0;
    for _ in 0..500 {
        let n = rng.gen_range(2..=5);
        let (u, v, x) = (
            random_word(rng, n, 10),
            random_word(rng, n, 10),
            random_word(rng, n, 10),
        );
        let uv = cmp(&u, &v);
        let vu = cmp(&v, &u);
        let antisymmetric = match uv {
            OrderVerdict::Less => vu == OrderVerdict::Greater,
            OrderVerdict::Greater => vu == OrderVerdict::Less,
            OrderVerdict::Equal => vu == OrderVerdict::Equal && same(&u, &v),
        };
        let irreflexive = cmp(&u, &u) == OrderVerdict::Equal;
        let transitive = !(uv == OrderVerdict::Less && cmp(&v, &x) == OrderVerdict::Less)
            || cmp(&u, &x) == OrderVerdict::Less;
        violations += usize::from(!(antisymmetric && irreflexive && transitive));
    }
    for _ in 0..200 {
        let n = rng.gen_range(2..=5);
        let (u, v, c) = (
            random_word(rng, n, 10),
            random_word(rng, n, 10),
            random_word(rng, n, 10),
        );
        if cmp(&c.compose(&u).unwrap(), &c.compose(&v).unwrap()) != cmp(&u, &v) {
            violations += 1;
        }
    }
    // bounded search for u < v with u c > v c, shortest lengths first
    let mut witness = None;
    'search: for len in 1..=6 {
        let words = short_words_b3(len.min(3));
        for u in &words {
            for v in &words {
                if cmp(u, v) != OrderVerdict::Less {
                    continue;
                }
                for c in &words {
                    if u.len() + v.len() + c.len() > 2 * len {
                        continue;
                    }
                    if cmp(&u.compose(c).unwrap(), &v.compose(c).unwrap()) == OrderVerdict::Greater
                    {
                        witness = Some(format!("u = [{u}], v = [{v}], c = [{c}]"));
                        break 'search;
                    }
                }
            }
        }
    }
    verdict(
        violations == 0 && witness.is_some(),
        format!(
            "{violations} axiom violations; right-invariance failure: {}",
            witness.as_deref().unwrap_or("none")
        ),
    )
}

fn partial_order(rng: &mut StdRng) -> Verdict {
    let pcmp = |u: &BraidWord, v: &BraidWord| partial_compare(u, v).unwrap();
    let strict = |p: PartialVerdict| matches!(p, PartialVerdict::Less | PartialVerdict::Greater);
    let h = subgroup_of(&w(4, &[1]));
    let mut violations = 0;
    let mut samples = 0;
    for in_subgroup in [false, true] {
        let draw = |rng: &mut StdRng| loop {
            let u = random_word(rng, 4, 10);
            if !in_subgroup || braid_core::member(&h, &u).unwrap() {
                return u;
            }
        };
        for _ in 0..500 {
            let (u, v, x, c) = (draw(rng), draw(rng), draw(rng), draw(rng));
            samples += 1;
            let mut ok = !strict(pcmp(&u, &u));
            if pcmp(&u, &v) == PartialVerdict::Less && pcmp(&v, &x) == PartialVerdict::Less {
                ok &= pcmp(&u, &x) == PartialVerdict::Less;
            }
            let before = pcmp(&u, &v);
            let moved = [
                pcmp(&c.compose(&u).unwrap(), &c.compose(&v).unwrap()),
                pcmp(&u.compose(&c).unwrap(), &v.compose(&c).unwrap()),
                pcmp(
                    &braid_core::conjugate(&u, &c).unwrap(),
                    &braid_core::conjugate(&v, &c).unwrap(),
                ),
            ];
            for after in moved {
                ok &= if strict(before) {
                    after == before
                } else {
                    !strict(after)
                };
            }
            violations += usize::from(!ok);
        }
    }
    verdict(
        violations == 0,
        format!("{samples} samples in B_4 and H_s1, {violations} violations"),
    )
}

fn strand_forgetting(rng: &mut StdRng) -> Verdict {
    let a = |i, j| BraidWord::pure_generator(i, j, 3).unwrap();
    let id2 = BraidWord::identity(2);
    let a12_in_b2 = BraidWord::pure_generator(1, 2, 2).unwrap();
    let stated = [
        (
            "phi1(A13) = A12",
            a(1, 3).forget_strand(1).unwrap(),
            a12_in_b2.clone(),
        ),
        ("phi1(A12) = 1", a(1, 2).forget_strand(1).unwrap(), id2),
        (
            "phi2(A13) = A12",
            a(1, 3).forget_strand(2).unwrap(),
            a12_in_b2,
        ),
    ];
    let mut mismatches = Vec::new();
    for (name, got, want) in &stated {
        if !same(got, want) {
            mismatches.push(format!("{name} (computed [{got}])"));
        }
    }
    let mut hom_failures = 0;
    for _ in 0..200 {
        let n = rng.gen_range(3..=5);
        let (u, v) = (random_pure(rng, n, 4), random_pure(rng, n, 4));
        let k = rng.gen_range(1..=n);
        let whole = u.compose(&v).unwrap().forget_strand(k).unwrap();
        let parts = u
            .forget_strand(k)
            .unwrap()
            .compose(&v.forget_strand(k).unwrap())
            .unwrap();
        hom_failures += usize::from(!same(&whole, &parts));
    }
    verdict(
        mismatches.is_empty() && hom_failures == 0,
        format!("stated values not reproduced: {mismatches:?}; homomorphism failures {hom_failures}/200"),
    )
}

fn expansion() -> Verdict {
    let (x, y) = (FormalWord::x(), FormalWord::y());
    let g = FormalWord::commutator(&x, &y);
    let mut failures = Vec::new();
    for p in 2..=4 {
        let product = expand_power_commutator(p)
            .unwrap()
            .iter()
            .fold(FormalWord::identity(), |acc, c| {
                acc.mul(&FormalWord::conjugate(&g, c))
            });
        if product != FormalWord::commutator(&x.pow(p), &y.pow(p)) {
            failures.push(format!("p = {p}"));
        }
    }
    let p2: Vec<String> = expand_power_commutator(2)
        .unwrap()
        .iter()
        .map(ToString::to_string)
        .collect();
    let order_ok = p2 == ["x", "x y", "1", "y"];
    verdict(
        failures.is_empty() && order_ok,
        format!(
            "failures {failures:?}; p = 2 conjugators ({})",
            p2.join(", ")
        ),
    )
}

fn main() -> ExitCode {
    let seed = std::env::var("ACCEPTANCE_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(20_240_601u64);
    let mut rng = StdRng::seed_from_u64(seed);
    let criteria: Vec<(&str, Verdict)> = vec![
        ("identity suite to n = 7", identity_suite()),
        ("non-commutation suite", non_commutation()),
        (
            "certificates for every non-pure cycle type, n = 3..6",
            witness_exhaustion(),
        ),
        ("Garside and handle reduction agree", cross_oracle(&mut rng)),
        ("Dehornoy order axioms", dehornoy(&mut rng)),
        ("partial bi-order axioms", partial_order(&mut rng)),
        ("strand forgetting", strand_forgetting(&mut rng)),
        ("power commutator expansion", expansion()),
    ];
    println!("acceptance (seed {seed})");
    let mut failed = 0;
    for (k, (name, v)) in criteria.iter().enumerate() {
        let tag = if v.passed { "PASS" } else { "FAIL" };
        println!("{tag} criterion {}: {name}: {}", k + 1, v.detail);
        failed += usize::from(!v.passed);
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
