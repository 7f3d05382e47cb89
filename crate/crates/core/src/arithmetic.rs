//! Number-theoretic primitives: factorization by trial division, Euler's
//! totient and the divisor lattice of `n`.

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Factorization {
    n: u64,
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    /// Builds a factorization from `(prime, exponent)` pairs. The pairs are
    /// trusted to be prime, so this is meant for sieve output.
    pub fn from_factors(mut factors: Vec<(u64, u32)>) -> Self {
        factors.sort_unstable();
        let n = factors.iter().map(|&(p, e)| p.pow(e)).product();
        Factorization { n, factors }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// `(prime, exponent)` pairs by ascending prime.
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    pub fn num_primes(&self) -> usize {
        self.factors.len()
    }

    /// `n = 1` counts as a prime power (of any prime, exponent 0).
    pub fn is_prime_power(&self) -> bool {
        self.factors.len() <= 1
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e == 1)
    }

    pub fn exponent_of(&self, p: u64) -> u32 {
        self.factors
            .iter()
            .find(|&&(q, _)| q == p)
            .map_or(0, |&(_, e)| e)
    }

    pub fn phi(&self) -> u64 {
        self.factors
            .iter()
            .map(|&(p, e)| p.pow(e - 1) * (p - 1))
            .product()
    }
}

pub fn factorize(n: u64) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::Zero);
    }
    let mut factors = Vec::new();
    let mut rest = n;
    let mut p = 2u64;
    while p.saturating_mul(p) <= rest {
        if rest.is_multiple_of(p) {
            let mut e = 0;
            while rest.is_multiple_of(p) {
                rest /= p;
                e += 1;
            }
            factors.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    Ok(Factorization { n, factors })
}

pub fn euler_phi(d: u64) -> Result<u64> {
    Ok(factorize(d)?.phi())
}

pub fn divisors(n: u64) -> Result<Vec<u64>> {
    Ok(DivisorLattice::new(&factorize(n)?).divisors().to_vec())
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn is_prime_power(n: u64) -> Result<bool> {
    Ok(factorize(n)?.is_prime_power())
}

/// Smallest-prime-factor table for `0..=limit`; entries 0 and 1 are 0.
pub fn smallest_prime_factors(limit: usize) -> Vec<u32> {
    let mut spf = vec![0u32; limit + 1];
    for i in 2..=limit {
        if spf[i] != 0 {
            continue;
        }
        spf[i] = i as u32;
        let mut j = i.saturating_mul(i);
        while j <= limit {
            if spf[j] == 0 {
                spf[j] = i as u32;
            }
            j += i;
        }
    }
    spf
}

/// Factors `n` with a table from [`smallest_prime_factors`].
pub fn factorize_with_table(n: u64, spf: &[u32]) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::Zero);
    }
    if n as usize >= spf.len() {
        return factorize(n);
    }
    let mut factors: Vec<(u64, u32)> = Vec::new();
    let mut rest = n as usize;
    while rest > 1 {
        let p = spf[rest] as u64;
        rest /= p as usize;
        match factors.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => factors.push((p, 1)),
        }
    }
    Ok(Factorization { n, factors })
}

/// All divisors of `n` with their exponent vectors and totients.
#[derive(Debug, Clone)]
pub struct DivisorLattice {
    n: u64,
    primes: Vec<u64>,
    divisors: Vec<u64>,
    exponents: Vec<Vec<u32>>,
    phis: Vec<u64>,
}

impl DivisorLattice {
    pub fn new(f: &Factorization) -> Self {
        let primes: Vec<u64> = f.primes().collect();
        let mut entries: Vec<(u64, Vec<u32>, u64)> = vec![(1, vec![0; primes.len()], 1)];
        for (i, &(p, e)) in f.factors().iter().enumerate() {
            let mut next = Vec::with_capacity(entries.len() * (e as usize + 1));
            for (d, exps, phi) in &entries {
                let mut pk = 1u64;
                for k in 0..=e {
                    let mut ex = exps.clone();
                    ex[i] = k;
                    let phi_pk = if k == 0 { 1 } else { pk / p * (p - 1) };
                    next.push((d * pk, ex, phi * phi_pk));
                    pk *= p;
                }
            }
            entries = next;
        }
        entries.sort_unstable_by_key(|(d, _, _)| *d);
        let mut divisors = Vec::with_capacity(entries.len());
        let mut exponents = Vec::with_capacity(entries.len());
        let mut phis = Vec::with_capacity(entries.len());
        for (d, ex, phi) in entries {
            divisors.push(d);
            exponents.push(ex);
            phis.push(phi);
        }
        DivisorLattice {
            n: f.n(),
            primes,
            divisors,
            exponents,
            phis,
        }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    /// Ascending, including 1 and `n`.
    pub fn divisors(&self) -> &[u64] {
        &self.divisors
    }

    pub fn len(&self) -> usize {
        self.divisors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.divisors.is_empty()
    }

    pub fn index_of(&self, d: u64) -> Option<usize> {
        self.divisors.binary_search(&d).ok()
    }

    pub fn exponents(&self, idx: usize) -> &[u32] {
        &self.exponents[idx]
    }

    pub fn phi(&self, idx: usize) -> u64 {
        self.phis[idx]
    }

    /// `divisors[a] | divisors[b]`.
    pub fn divides(&self, a: usize, b: usize) -> bool {
        self.exponents[a]
            .iter()
            .zip(&self.exponents[b])
            .all(|(x, y)| x <= y)
    }

    /// Degree of a vertex of order `divisors[idx]` in the power graph of Z_n:
    /// `(d - 1) + sum of phi(e)` over proper multiples `e | n` of `d`.
    pub fn degree(&self, idx: usize) -> u64 {
        let d = self.divisors[idx];
        let up: u64 = (0..self.len())
            .filter(|&e| e != idx && self.divides(idx, e))
            .map(|e| self.phis[e])
            .sum();
        d - 1 + up
    }
}
