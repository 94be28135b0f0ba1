//! Desk-scale property suite behind `wfrec check`.

use std::collections::{HashSet, VecDeque};

use rand::Rng;
use serde_json::json;
use wfrec_core::combinators::{transitive_closure, FiniteRelation};
use wfrec_core::derived::{dm_oracle, multiset_descent_step, multiset_of, multiset_relation, occurrences};
use wfrec_core::harness::{carrier_rank_step, check_recursion_equation, check_unique_solution, fuzz_descent, fuzz_descent_with, seeded_rng};
use wfrec_core::ordinal::{compare, random_ordinal, random_predecessor, to_nested, unit_nested_relation};
use wfrec_core::power::pow_relation;
use wfrec_core::programs::{ackermann, fib_cov, quicksort};
use wfrec_core::wtree::{check_characterization, encode_nat, wtree_relation};
use wfrec_core::{NatLess, WellFounded};

use crate::Output;

type Check = fn(u64) -> Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    ok.then_some(()).ok_or_else(msg)
}

fn recursion_equations(_seed: u64) -> Result<String, String> {
    let nat: Vec<u64> = (0..60).collect();
    ensure(check_recursion_equation(&NatLess, &carrier_rank_step(&NatLess, &nat), &nat).passed(), || "nat <".into())?;
    let pow = pow_relation(FiniteRelation::nat_less(4));
    let lists: Vec<_> = (0u32..16)
        .map(|m| pow.list((0..4).rev().filter(|b| m >> b & 1 == 1).collect()).unwrap())
        .collect();
    ensure(check_recursion_equation(&pow, &carrier_rank_step(&pow, &lists), &lists).passed(), || "power".into())?;
    let base = FiniteRelation::nat_less(3);
    let bags: Vec<_> = [vec![], vec![0], vec![1, 0], vec![2], vec![2, 2], vec![2, 1, 0]]
        .iter()
        .map(|m| multiset_of(&base, m).unwrap())
        .collect();
    let ms = multiset_relation(base);
    ensure(check_recursion_equation(&ms, &carrier_rank_step(&ms, &bags), &bags).passed(), || "multiset".into())?;
    let trees: Vec<_> = (0..8).map(encode_nat).collect();
    let w = wtree_relation();
    ensure(check_recursion_equation(&w, &carrier_rank_step(&w, &trees), &trees).passed(), || "W-tree".into())?;
    Ok("nat <, power, multiset, W-tree".into())
}

fn uniqueness(_seed: u64) -> Result<String, String> {
    let r = FiniteRelation::nat_less(15);
    let carrier: Vec<usize> = (0..15).collect();
    let step = carrier_rank_step(&r, &carrier);
    ensure(check_unique_solution(&r, &step, &carrier, |&x| x as u64), || "rank table rejected".into())?;
    for t in 0..15 {
        ensure(
            !check_unique_solution(&r, &step, &carrier, move |&x| x as u64 + u64::from(x == t)),
            || format!("perturbation at {t} accepted"),
        )?;
    }
    Ok("15 perturbations rejected".into())
}

fn sorting(seed: u64) -> Result<String, String> {
    let mut rng = seeded_rng(seed);
    for _ in 0..200 {
        let l: Vec<i32> = (0..rng.gen_range(0..=30)).map(|_| rng.gen_range(-50..50)).collect();
        let mut expected = l.clone();
        expected.sort();
        ensure(quicksort(|a: &i32, b: &i32| a <= b, &l) == expected, || format!("{l:?}"))?;
    }
    Ok("200 random lists".into())
}

fn power_rank(_seed: u64) -> Result<String, String> {
    let rel = pow_relation(NatLess);
    let masks: Vec<u32> = (0..32).collect();
    let list = |m: u32| rel.list((0..5).rev().filter(|b| m >> b & 1 == 1).collect()).unwrap();
    for &a in &masks {
        for &b in &masks {
            ensure(rel.decide(&list(a), &list(b)).is_some() == (a < b), || format!("ranks {a} vs {b}"))?;
        }
    }
    Ok("32 lists".into())
}

fn multisets(_seed: u64) -> Result<String, String> {
    let base = FiniteRelation::nat_less(3);
    let rel = multiset_relation(base.clone());
    let all: Vec<Vec<usize>> = vec![vec![], vec![0], vec![1], vec![2], vec![0, 0], vec![1, 0], vec![1, 1], vec![2, 0], vec![2, 1], vec![2, 2]];
    for a in &all {
        for b in &all {
            let (ma, mb) = (multiset_of(&base, a).unwrap(), multiset_of(&base, b).unwrap());
            let oracle = dm_oracle(a, b, &base).map_err(|e| e.to_string())?;
            ensure(rel.decide(&ma, &mb).is_some() == oracle, || format!("{a:?} vs {b:?}"))?;
        }
    }
    Ok(format!("{} pairs", all.len() * all.len()))
}

fn closure(seed: u64) -> Result<String, String> {
    let mut rng = seeded_rng(seed);
    for _ in 0..20 {
        let n = rng.gen_range(1..=6);
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .filter(|_| rng.gen_bool(0.3))
            .collect();
        let tc = transitive_closure(FiniteRelation::new(n, &edges).unwrap());
        for a in 0..n {
            let mut seen = HashSet::new();
            let mut queue: VecDeque<usize> = edges.iter().filter(|e| e.0 == a).map(|e| e.1).collect();
            while let Some(x) = queue.pop_front() {
                if seen.insert(x) {
                    queue.extend(edges.iter().filter(|e| e.0 == x).map(|e| e.1));
                }
            }
            for b in 0..n {
                ensure(tc.decide(&a, &b).is_some() == seen.contains(&b), || format!("{a} -> {b} in {edges:?}"))?;
            }
        }
    }
    Ok("20 random relations".into())
}

fn characterization(_seed: u64) -> Result<String, String> {
    let lt = FiniteRelation::nat_less(5);
    let pairs: Vec<(usize, usize)> = (0..5).flat_map(|a| (0..5).map(move |b| (a, b))).collect();
    let report = check_characterization(&lt, &pairs);
    ensure(report.passed(), || report.failures.join("; "))?;
    Ok(format!("{} pairs", report.checked))
}

fn ordinals(seed: u64) -> Result<String, String> {
    let mut rng = seeded_rng(seed);
    let nested = unit_nested_relation();
    for _ in 0..200 {
        let (a, b) = (random_ordinal(&mut rng, 2, 3, 3), random_ordinal(&mut rng, 2, 3, 3));
        let lt = nested.decide(&to_nested(&a), &to_nested(&b)).is_some();
        ensure(lt == compare(&a, &b).is_lt(), || format!("{a} vs {b}"))?;
    }
    Ok("200 random pairs".into())
}

fn descents(seed: u64) -> Result<String, String> {
    for s in seed..seed + 50 {
        fuzz_descent(&NatLess, &100, 10_000, s).map_err(|e| e.to_string())?;
        let m = multiset_of(&NatLess, &[3, 2, 2]).unwrap();
        let c = fuzz_descent_with(&m, 10_000, s, |x, rng| multiset_descent_step(&NatLess, x, 3, rng)).map_err(|e| e.to_string())?;
        ensure(c.last().is_some_and(|m| occurrences(m).is_empty()), || "multiset chain stopped early".into())?;
        let o = wfrec_core::ordinal::parse("w^(w+1)*2 + w^3").unwrap();
        fuzz_descent_with(&o, 10_000, s, |x, rng| random_predecessor(x, rng, 3)).map_err(|e| e.to_string())?;
    }
    Ok("150 chains".into())
}

fn programs(_seed: u64) -> Result<String, String> {
    let ack = |m, n| -> u64 {
        fn a(m: u64, n: u64) -> u64 {
            match (m, n) {
                (0, n) => n + 1,
                (m, 0) => a(m - 1, 1),
                (m, n) => a(m - 1, a(m, n - 1)),
            }
        }
        a(m, n)
    };
    for m in 0..=3 {
        for n in 0..=3 {
            ensure(ackermann(m, n) == Ok(ack(m, n)), || format!("A({m}, {n})"))?;
        }
    }
    let (mut a, mut b) = (0u128, 1u128);
    for n in 0..=20 {
        ensure(fib_cov(n) == a, || format!("fib({n})"))?;
        (a, b) = (b, a + b);
    }
    Ok("Ackermann m, n <= 3; Fibonacci n <= 20".into())
}

fn nat_trees(_seed: u64) -> Result<String, String> {
    let tc = transitive_closure(wtree_relation());
    for i in 0..6 {
        for j in 0..6 {
            ensure(tc.decide(&encode_nat(i), &encode_nat(j)).is_some() == (i < j), || format!("{i} vs {j}"))?;
        }
    }
    Ok("36 pairs".into())
}

const CHECKS: [(&str, Check); 11] = [
    ("recursion-equation", recursion_equations),
    ("uniqueness", uniqueness),
    ("quicksort", sorting),
    ("power-rank", power_rank),
    ("multiset-oracle", multisets),
    ("transitive-closure", closure),
    ("characterization", characterization),
    ("ordinal-nested", ordinals),
    ("descent", descents),
    ("programs", programs),
    ("nat-wtree", nat_trees),
];

pub fn run(seed: u64) -> Output {
    let mut lines = Vec::new();
    let mut results = Vec::new();
    let mut failed = 0;
    for (name, check) in CHECKS {
        let (passed, detail) = match check(seed) {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        failed += usize::from(!passed);
        lines.push(format!("{} {name}: {detail}", if passed { "PASS" } else { "FAIL" }));
        results.push(json!({ "name": name, "passed": passed, "detail": detail }));
    }
    lines.push(format!("{} of {} checks passed", CHECKS.len() - failed, CHECKS.len()));
    Output {
        text: lines.join("\n"),
        json: json!({ "passed": failed == 0, "results": results }),
        code: if failed == 0 { 0 } else { 1 },
    }
}
