//! Degree dominance for squarefree `n = p_1 p_2 ... p_k` (primes labeled
//! descending): a vertex of prime order `p` has strictly larger degree than
//! any vertex whose order is a proper composite divisor `d` of `n` with every
//! prime of `d` at most `p`.
//!
//! Degrees come from the divisor-lattice closed form, so no graph is built.

use rayon::prelude::*;
use serde_json::json;

use super::report::{status_of, CheckReport, Comparison, Relation, Status};
use crate::arithmetic::{
    factorize, factorize_with_table, smallest_prime_factors, DivisorLattice, Factorization,
};
use crate::error::Result;
use crate::injection::{full_map, verify_map, InjectionInstance};

pub const CHECK_NAME: &str = "prime-degree-dominance";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeComparison {
    pub p: u64,
    pub d: u64,
    pub deg_p: u64,
    pub deg_d: u64,
}

impl DegreeComparison {
    pub fn holds(&self) -> bool {
        self.deg_p > self.deg_d
    }
}

/// All comparisons for a squarefree `n` with at least two primes; empty
/// otherwise.
pub fn dominance_comparisons(f: &Factorization) -> Vec<DegreeComparison> {
    if f.num_primes() < 2 || !f.is_squarefree() {
        return Vec::new();
    }
    let lat = DivisorLattice::new(f);
    let primes = lat.primes();
    let mut out = Vec::new();
    for idx in 1..lat.len() - 1 {
        let ex = lat.exponents(idx);
        if ex.iter().filter(|&&e| e > 0).count() < 2 {
            continue;
        }
        let largest = (0..primes.len())
            .rev()
            .find(|&i| ex[i] > 0)
            .expect("composite");
        let deg_d = lat.degree(idx);
        for &p in &primes[largest..] {
            let pi = lat.index_of(p).expect("prime divides n");
            out.push(DegreeComparison {
                p,
                d: lat.divisors()[idx],
                deg_p: lat.degree(pi),
                deg_d,
            });
        }
    }
    out
}

/// The injection instance used for squarefree `n` with `k >= 3` primes:
/// `m_i = p_i - 1` for the `k - 1` largest primes, `m = p_k - 1`.
pub fn injection_instance_for(f: &Factorization) -> Option<InjectionInstance> {
    if f.num_primes() < 3 || !f.is_squarefree() {
        return None;
    }
    let mut desc: Vec<u64> = f.primes().collect();
    desc.reverse();
    let m = desc.pop().expect("k >= 3") - 1;
    InjectionInstance::new(desc.into_iter().map(|p| p - 1).collect(), m).ok()
}

pub fn check_prime_degree_dominance(n: u64) -> Result<CheckReport> {
    let f = factorize(n)?;
    let ascending: Vec<u64> = f.primes().collect();
    let descending: Vec<u64> = ascending.iter().rev().copied().collect();
    if f.num_primes() < 2 || !f.is_squarefree() {
        return Ok(CheckReport {
            n,
            check: CHECK_NAME,
            status: Status::HypothesisNotMet,
            details: json!({
                "reason": "n must be squarefree with at least two prime factors",
                "primes_ascending": ascending,
            }),
        });
    }
    let comparisons: Vec<Comparison> = dominance_comparisons(&f)
        .into_iter()
        .map(|c| {
            Comparison::new(
                "degree",
                format!("p={} d={}", c.p, c.d),
                c.deg_p,
                Relation::Gt,
                c.deg_d,
            )
        })
        .collect();
    let mut status = status_of(&comparisons);

    let injection = injection_instance_for(&f).map(|inst| {
        let problems = verify_map(&inst, &full_map(&inst));
        if !problems.is_empty() {
            status = Status::Fail;
        }
        json!({ "ms": inst.ms(), "m": inst.m(), "problems": problems })
    });

    Ok(CheckReport {
        n,
        check: CHECK_NAME,
        status,
        details: json!({
            "primes_descending": descending,
            "primes_ascending": ascending,
            "comparisons": comparisons,
            "injection": injection,
        }),
    })
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DominanceSweep {
    /// Squarefree `n` in range with at least two primes.
    pub instances: u64,
    /// Instances with at least one comparison.
    pub nonvacuous: u64,
    pub comparisons: u64,
    pub violations: Vec<(u64, DegreeComparison)>,
}

/// Runs the comparisons for every `n` in `2..=limit`, factoring with a sieve.
pub fn sweep_prime_degree_dominance(limit: u64) -> DominanceSweep {
    let spf = smallest_prime_factors(limit as usize);
    let partial = (2..=limit)
        .into_par_iter()
        .fold(DominanceSweep::default, |mut acc, n| {
            let f = factorize_with_table(n, &spf).expect("n within sieve");
            if f.num_primes() >= 2 && f.is_squarefree() {
                acc.instances += 1;
                let cs = dominance_comparisons(&f);
                if !cs.is_empty() {
                    acc.nonvacuous += 1;
                }
                acc.comparisons += cs.len() as u64;
                acc.violations
                    .extend(cs.into_iter().filter(|c| !c.holds()).map(|c| (n, c)));
            }
            acc
        });
    let mut total = partial.reduce(DominanceSweep::default, |mut a, b| {
        a.instances += b.instances;
        a.nonvacuous += b.nonvacuous;
        a.comparisons += b.comparisons;
        a.violations.extend(b.violations);
        a
    });
    total
        .violations
        .sort_unstable_by_key(|&(n, c)| (n, c.p, c.d));
    total
}
