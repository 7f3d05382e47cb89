//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
//! fails. Runs without the libtest harness so the lines always print.

use std::collections::{BTreeMap, HashSet};
use std::process::Command;
use std::time::Instant;

use num_bigint::BigUint;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use rayon::prelude::*;

use pgaut::arithmetic::factorize;
use pgaut::aut::{
    automorphism_group, brute_force_aut, closed_twin_classes, twin_lower_bound_order,
};
use pgaut::cli::verify::{power_graph_source, run_verify, Method, VerifyConfig};
use pgaut::graph::Graph;
use pgaut::injection::{full_map, InjectionInstance};
use pgaut::powergraph::{build_power_graph, degree_closed_form};
use pgaut::theorem::neighborhoods::neighborhood_comparisons;
use pgaut::theorem::{aut_order_formula, sweep_prime_degree_dominance};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn factorial(k: u64) -> BigUint {
    (1..=k).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}

/// Order by the literal additive definition: least k >= 1 with k*v = 0 mod n.
fn additive_order(n: u64, v: u64) -> u64 {
    (1..=n).find(|&k| (k * v).is_multiple_of(n)).expect("k = n works")
}

/// Adjacency from the definition: one is a positive multiple of the other.
fn literal_adjacency(n: u64) -> Vec<Vec<bool>> {
    let size = n as usize;
    let mut adj = vec![vec![false; size]; size];
    for x in 0..n {
        let mut y = x % n;
        for _ in 0..n {
            if y != x {
                adj[x as usize][y as usize] = true;
                adj[y as usize][x as usize] = true;
            }
            y = (y + x) % n;
        }
    }
    adj
}

/// Orders of the automorphism group predicted without the library's
/// formula: prime powers give n!, otherwise the product over orders d of
/// |X_d|! with the identity folded into the class of generators.
fn predicted_order(n: u64) -> BigUint {
    let mut sizes: BTreeMap<u64, u64> = BTreeMap::new();
    for v in 0..n {
        *sizes.entry(additive_order(n, v)).or_default() += 1;
    }
    let is_prime_power = {
        let p = (2..=n).find(|&p| n.is_multiple_of(p));
        match p {
            None => true,
            Some(p) => {
                let mut m = n;
                while m.is_multiple_of(p) {
                    m /= p;
                }
                m == 1
            }
        }
    };
    if is_prime_power {
        return factorial(n);
    }
    sizes
        .iter()
        .map(|(&d, &s)| {
            if d == n {
                factorial(s + 1)
            } else if d == 1 {
                BigUint::one()
            } else {
                factorial(s)
            }
        })
        .product()
}

fn criterion_1() -> Outcome {
    for n in 2..=10u64 {
        let g = build_power_graph(n).map_err(|e| e.to_string())?;
        let brute = brute_force_aut(g.graph())
            .map_err(|e| e.to_string())?
            .order();
        let formula = aut_order_formula(n).unwrap().order;
        if brute != formula || brute != predicted_order(n) {
            return Err(format!("n={n}: brute {brute}, formula {formula}"));
        }
    }
    Ok("n in [2,10]".into())
}

fn criterion_2() -> Outcome {
    for n in 2..=200u64 {
        let g = build_power_graph(n).map_err(|e| e.to_string())?;
        let formula = aut_order_formula(n).unwrap().order;
        let ir = automorphism_group(g.graph())
            .map_err(|e| format!("n={n}: {e}"))?
            .order();
        let twin = twin_lower_bound_order(g.graph());
        if ir != formula || twin != formula || formula != predicted_order(n) {
            return Err(format!("n={n}: formula {formula}, ir {ir}, twin {twin}"));
        }
    }
    Ok("n in [2,200]".into())
}

fn criterion_3() -> Outcome {
    let bad: Vec<String> = (1..=500u64)
        .into_par_iter()
        .filter_map(|n| {
            let adj = literal_adjacency(n);
            let g = build_power_graph(n).unwrap();
            for v in 0..n as usize {
                let brute = adj[v].iter().filter(|&&b| b).count() as u64;
                let closed = degree_closed_form(n, additive_order(n, v as u64)).unwrap();
                if brute != closed || g.graph().degree(v) as u64 != brute {
                    return Some(format!("n={n} v={v}: brute {brute}, closed form {closed}"));
                }
            }
            None
        })
        .collect();
    match bad.first() {
        None => Ok("every vertex, n <= 500".into()),
        Some(b) => Err(b.clone()),
    }
}

fn criterion_4() -> Outcome {
    let mut checked = 0;
    for n in 2..=200u64 {
        if factorize(n).unwrap().is_prime_power() {
            continue;
        }
        checked += 1;
        // Expected classes from additive orders.
        let mut by_order: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
        for v in 0..n {
            let d = additive_order(n, v);
            let key = if d == n { 1 } else { d };
            by_order.entry(key).or_default().push(v as u32);
        }
        let mut expected: Vec<Vec<u32>> = by_order.into_values().collect();
        for c in &mut expected {
            c.sort_unstable();
        }
        expected.sort_unstable_by_key(|c| c[0]);

        let g = build_power_graph(n).unwrap();
        let twins = closed_twin_classes(g.graph());
        if twins.cells() != expected.as_slice() {
            return Err(format!("n={n}: twin classes differ"));
        }
        let mut class_of = vec![0usize; n as usize];
        for (i, c) in expected.iter().enumerate() {
            for &v in c {
                class_of[v as usize] = i;
            }
        }
        let grp = automorphism_group(g.graph()).map_err(|e| e.to_string())?;
        for p in grp.generators() {
            if (0..n as u32).any(|v| class_of[p.apply(v) as usize] != class_of[v as usize]) {
                return Err(format!("n={n}: generator {p} moves a class"));
            }
        }
    }
    Ok(format!("{checked} non-prime-power n"))
}

fn random_instance(rng: &mut ChaCha20Rng) -> (Vec<u64>, u64) {
    let k = rng.gen_range(2..=12usize);
    let mut set = HashSet::new();
    while set.len() < k {
        set.insert(rng.gen_range(1..=1_000_000u64));
    }
    let mut ms: Vec<u64> = set.into_iter().collect();
    ms.sort_unstable_by(|a, b| b.cmp(a));
    let m = match rng.gen_range(0..4) {
        0 => rng.gen_range(1..=ms[k - 1]),
        1 => rng.gen_range(ms[0]..=1_000_000),
        2 => ms[rng.gen_range(0..k)],
        _ => rng.gen_range(ms[k - 1]..=ms[0]),
    };
    (ms, m)
}

fn criterion_5() -> Outcome {
    let mut rng = ChaCha20Rng::seed_from_u64(0x5eed_2024);
    for trial in 0..1000 {
        let (ms, m) = random_instance(&mut rng);
        let k = ms.len();
        let inst = InjectionInstance::new(ms.clone(), m).map_err(|e| e.to_string())?;
        let map = full_map(&inst);
        let expected = (1usize << (k - 1)) - 1;
        // Codomain: subsets of the k element slots containing slot 0, not
        // all of them; the marker is always in.
        let codomain = (0..1u64 << k)
            .filter(|s| s & 1 == 1 && *s != (1 << k) - 1)
            .count();
        if map.len() != expected || codomain != expected {
            return Err(format!(
                "trial {trial}: sizes {} / {codomain}, expected {expected}",
                map.len()
            ));
        }
        let mut seen = HashSet::new();
        for a in &map {
            if a.from & 1 != 0 || a.from == 0 {
                return Err(format!("trial {trial}: domain element outside B"));
            }
            let img = a.to.elements;
            if !seen.insert(img) {
                return Err(format!("trial {trial}: image repeated"));
            }
            if img & 1 == 0 || img == (1 << k) - 1 || img >> k != 0 {
                return Err(format!("trial {trial}: bad image {img:b}"));
            }
            let prod = |mask: u64| -> BigUint {
                (0..k)
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| BigUint::from(ms[i]))
                    .product()
            };
            if prod(a.from) >= prod(img) {
                return Err(format!("trial {trial}: product inequality fails"));
            }
            let values = a.to.values(&inst);
            if values.first() != Some(&ms[0]) || values.last() != Some(&m) {
                return Err(format!("trial {trial}: image misses m_1 or m"));
            }
        }
    }
    Ok("1000 seeded instances".into())
}

fn criterion_6() -> Outcome {
    let s = sweep_prime_degree_dominance(1_000_000);
    if let Some((n, c)) = s.violations.first() {
        return Err(format!(
            "{} violations, first n={n} p={} d={}",
            s.violations.len(),
            c.p,
            c.d
        ));
    }
    // Closed-form degrees against the literal graph on a sample.
    for n in [30u64, 42, 66, 70, 78, 105, 210, 330, 390] {
        let adj = literal_adjacency(n);
        let f = factorize(n).unwrap();
        for c in pgaut::theorem::degrees::dominance_comparisons(&f) {
            let deg = |d: u64| adj[(n / d) as usize].iter().filter(|&&b| b).count() as u64;
            if deg(c.p) != c.deg_p || deg(c.d) != c.deg_d {
                return Err(format!("n={n}: closed-form degree mismatch"));
            }
        }
    }
    Ok(format!(
        "{} squarefree n, {} comparisons",
        s.instances, s.comparisons
    ))
}

fn criterion_7() -> Outcome {
    const IDENTITIES: [&str; 5] = [
        "lowered-exponent-count",
        "two-primes-count-up",
        "two-primes-count-down",
        "single-q-count-up",
        "single-q-count-down",
    ];
    let results: Vec<(u64, BTreeMap<&'static str, usize>, Vec<String>)> = (2..=5000u64)
        .into_par_iter()
        .map(|n| {
            let g = build_power_graph(n).unwrap();
            let mut counts = BTreeMap::new();
            let mut bad = Vec::new();
            for c in neighborhood_comparisons(&g) {
                if IDENTITIES.contains(&c.case) {
                    *counts.entry(c.case).or_default() += 1;
                    if !c.holds {
                        bad.push(format!(
                            "n={n} {} {}: {} vs {}",
                            c.case, c.config, c.lhs, c.rhs
                        ));
                    }
                }
            }
            (n, counts, bad)
        })
        .collect();
    let mut totals: BTreeMap<&str, usize> = BTreeMap::new();
    for (_, counts, bad) in &results {
        if let Some(b) = bad.first() {
            return Err(b.clone());
        }
        for (k, v) in counts {
            *totals.entry(k).or_default() += v;
        }
    }
    if IDENTITIES
        .iter()
        .any(|k| totals.get(k).copied().unwrap_or(0) == 0)
    {
        return Err(format!("some identity never applied: {totals:?}"));
    }
    let total: usize = totals.values().sum();
    Ok(format!("{total} identities, n <= 5000"))
}

fn criterion_8() -> Outcome {
    let mut suite: Vec<(String, Graph, BigUint)> = Vec::new();
    for m in 1..=12u64 {
        suite.push((format!("K_{m}"), Graph::complete(m as usize), factorial(m)));
        suite.push((format!("E_{m}"), Graph::empty(m as usize), factorial(m)));
        if m >= 3 {
            suite.push((
                format!("C_{m}"),
                Graph::cycle(m as usize),
                BigUint::from(2 * m),
            ));
        }
        if m >= 2 {
            suite.push((
                format!("P_{m}"),
                Graph::path(m as usize),
                BigUint::from(2u32),
            ));
        }
    }
    let petersen = Graph::petersen();
    let brute = brute_force_aut(&petersen).unwrap().order();
    if brute != BigUint::from(120u32) {
        return Err(format!("Petersen brute force gave {brute}"));
    }
    suite.push(("Petersen".into(), petersen, brute));
    for (name, g, expected) in &suite {
        let got = automorphism_group(g).map_err(|e| e.to_string())?.order();
        if &got != expected {
            return Err(format!("{name}: got {got}, expected {expected}"));
        }
    }
    Ok(format!("{} graphs", suite.len()))
}

fn criterion_9() -> Outcome {
    let status = Command::new(env!("CARGO_BIN_EXE_pgaut"))
        .args([
            "verify",
            "--from",
            "2",
            "--to",
            "50",
            "--methods",
            "formula,ir",
        ])
        .output()
        .map_err(|e| e.to_string())?;
    if status.status.code() != Some(0) {
        return Err(format!("clean run exited {:?}", status.status.code()));
    }
    let cfg = VerifyConfig {
        from: 2,
        to: 50,
        methods: vec![Method::Formula, Method::Ir],
        jobs: 1,
        options: Default::default(),
    };
    // Flip the edge between generator 1 and the element 2 of order 24 in Z_48.
    let corrupt = |n: u64| {
        let g = power_graph_source(n)?;
        if n == 48 {
            g.with_toggled_edge(1, 2)
        } else {
            Ok(g)
        }
    };
    let report = run_verify(&cfg, &corrupt).map_err(|e| e.to_string())?;
    let failed: Vec<u64> = report
        .entries
        .iter()
        .filter(|e| !e.agree)
        .map(|e| e.n)
        .collect();
    if report.exit_code() != 1 || failed != vec![48] {
        return Err(format!(
            "corrupted run exited {}, failing n {failed:?}",
            report.exit_code()
        ));
    }
    Ok("clean exit 0, corrupted exit 1".into())
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("brute force equals formula, n in [2,10]", criterion_1),
        (
            "engine and twin bound equal formula, n in [2,200]",
            criterion_2,
        ),
        ("closed-form degrees, n <= 500", criterion_3),
        (
            "twin classes and generators preserve classes, n <= 200",
            criterion_4,
        ),
        ("injection property suite", criterion_5),
        ("prime degree dominance, squarefree n <= 10^6", criterion_6),
        ("neighborhood counting identities, n <= 5000", criterion_7),
        ("engine on classic graph families", criterion_8),
        ("verify exit-code contract", criterion_9),
    ];
    let mut failures = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(msg) => println!("criterion {}: PASS  {name} ({msg}; {secs:.2}s)", i + 1),
            Err(msg) => {
                failures += 1;
                println!("criterion {}: FAIL  {name} ({msg}; {secs:.2}s)", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures > 0 {
        std::process::exit(1);
    }
}
