//! Neighborhood-difference counts that rule out a vertex of prime order being
//! mapped to a vertex of composite order.
//!
//! Write `n = p_1^x_1 ... p_k^x_k` with the prime powers descending. All set
//! sizes are over closed neighborhoods `N[v]` and are counted on the built
//! graph; the expected values are closed forms in the exponents. Degrees use
//! the divisor-lattice closed form.
//!
//! For two primes the roles are `n = p^a q^b` with `p^a > q^b`.

use serde_json::json;

use super::report::{status_of, CheckReport, Comparison, Relation, Status};
use crate::arithmetic::DivisorLattice;
use crate::error::Result;
use crate::powergraph::{build_power_graph, PowerGraph};

pub const CHECK_NAME: &str = "neighborhood-counts";

/// `(prime, exponent, prime^exponent)` by descending prime power.
pub fn descending_prime_powers(g: &PowerGraph) -> Vec<(u64, u32, u64)> {
    let mut pp: Vec<(u64, u32, u64)> = g
        .factorization()
        .factors()
        .iter()
        .map(|&(p, e)| (p, e, p.pow(e)))
        .collect();
    pp.sort_unstable_by_key(|&(_, _, pe)| std::cmp::Reverse(pe));
    pp
}

struct Counter<'a> {
    g: &'a PowerGraph,
    lat: &'a DivisorLattice,
}

impl Counter<'_> {
    /// `|N[x_a] \ N[x_b]|` for vertices of order `a` and `b`.
    fn diff(&self, a: u64, b: u64) -> u64 {
        let ra = self
            .g
            .graph()
            .closed_row(self.g.representative(a).expect("divisor"));
        let rb = self
            .g
            .graph()
            .closed_row(self.g.representative(b).expect("divisor"));
        ra.iter()
            .zip(&rb)
            .map(|(x, y)| (x & !y).count_ones() as u64)
            .sum()
    }

    fn degree(&self, d: u64) -> u64 {
        self.lat.degree(self.lat.index_of(d).expect("divisor"))
    }
}

/// Runs every applicable configuration on an already built graph.
pub fn neighborhood_comparisons(g: &PowerGraph) -> Vec<Comparison> {
    let n = g.n();
    let pp = descending_prime_powers(g);
    let k = pp.len();
    let mut out = Vec::new();
    if k < 2 {
        return out;
    }
    let c = Counter {
        g,
        lat: g.lattice(),
    };

    // Counting identity with any prime as pivot: lowering the exponent of
    // another prime Q to r leaves the pivot's full power in t, so the only
    // vertices of N[x_t] outside N[x_P] are those whose order divides
    // t / P^x_P, other than the identity.
    for &(p, _, p_pow) in &pp {
        for &(q, xq, q_pow) in &pp {
            if q == p {
                continue;
            }
            for r in 1..xq {
                let t = n / q_pow * q.pow(r);
                out.push(Comparison::new(
                    "lowered-exponent-count",
                    format!("pivot={p} lowered={q} r={r} t={t}"),
                    c.diff(t, p),
                    Relation::Eq,
                    t / p_pow - 1,
                ));
            }
        }
    }

    if k >= 3 {
        let (p1, _, p1_pow) = pp[0];
        let (p2, x2, p2_pow) = pp[1];
        let tail_full: u64 = pp[2..].iter().map(|&(_, _, v)| v).product();
        let tail_no_last: u64 = pp[2..k - 1].iter().map(|&(_, _, v)| v).product();
        for r in 1..x2 {
            let t = n / p2_pow * p2.pow(r);
            let bound = (p1_pow - 1) * (p2_pow - p2.pow(r)) * tail_no_last;
            let cfg = format!("r={r} t={t}");
            out.push(Comparison::new(
                "lowered-exponent-opposite",
                cfg.clone(),
                c.diff(p1, t),
                Relation::Ge,
                bound,
            ));
            out.push(Comparison::new(
                "lowered-exponent-bound",
                cfg.clone(),
                bound,
                Relation::Gt,
                p2.pow(r) * tail_full,
            ));
            out.push(Comparison::new(
                "lowered-exponent-degree",
                cfg,
                c.degree(p1),
                Relation::Gt,
                c.degree(t),
            ));
        }

        // Both explicit inequalities of the chain through x_p2.
        let (_, x1, _) = pp[0];
        for s in 1..x1 {
            let t = n / p1_pow * p1.pow(s);
            let cfg = format!("s={s} t={t}");
            out.push(Comparison::new(
                "pivot-exponent-prime-degrees",
                cfg.clone(),
                c.degree(p1),
                Relation::Gt,
                c.degree(p2),
            ));
            out.push(Comparison::new(
                "pivot-exponent-degree",
                cfg,
                c.degree(p2),
                Relation::Gt,
                c.degree(t),
            ));
        }

        let lat = g.lattice();
        for idx in 0..lat.len() - 1 {
            if lat.exponents(idx).iter().all(|&e| e > 0) {
                let t = lat.divisors()[idx];
                out.push(Comparison::new(
                    "full-support-degree",
                    format!("t={t}"),
                    c.degree(p1),
                    Relation::Gt,
                    c.degree(t),
                ));
            }
        }
    } else {
        let (p, a, p_pow) = pp[0];
        let (q, b, q_pow) = pp[1];
        if a == 1 {
            for s in 2..=b {
                out.push(Comparison::new(
                    "squarefree-side-degree",
                    format!("s={s}"),
                    c.degree(q),
                    Relation::Gt,
                    c.degree(q.pow(s)),
                ));
            }
        } else {
            for m in 1..=a {
                let t = p.pow(m) * q_pow;
                let cfg = format!("m={m} t={t}");
                let up = c.diff(t, p);
                let down = c.diff(p, t);
                out.push(Comparison::new(
                    "two-primes-count-up",
                    cfg.clone(),
                    up,
                    Relation::Eq,
                    q_pow - 1,
                ));
                out.push(Comparison::new(
                    "two-primes-count-down",
                    cfg.clone(),
                    down,
                    Relation::Eq,
                    (p_pow - p.pow(m)) * q_pow / q,
                ));
                if b > 1 {
                    out.push(Comparison::new("two-primes-distinct", cfg, up, Relation::Ne, down));
                }
            }
            if b == 1 {
                for s in 2..=a {
                    let ps = p.pow(s);
                    let cfg = format!("s={s}");
                    let up = c.diff(ps, q);
                    let down = c.diff(q, ps);
                    out.push(Comparison::new(
                        "single-q-count-up",
                        cfg.clone(),
                        up,
                        Relation::Eq,
                        p_pow - 1,
                    ));
                    out.push(Comparison::new(
                        "single-q-count-down",
                        cfg.clone(),
                        down,
                        Relation::Eq,
                        (q - 1) * p.pow(s - 1),
                    ));
                    out.push(Comparison::new(
                        "single-q-distinct",
                        cfg,
                        up,
                        Relation::Ne,
                        down,
                    ));
                }
            }
        }
    }
    out
}

pub fn check_neighborhood_counts(n: u64) -> Result<CheckReport> {
    let g = build_power_graph(n)?;
    let pp = descending_prime_powers(&g);
    let ascending: Vec<[u64; 2]> = g
        .factorization()
        .factors()
        .iter()
        .map(|&(p, e)| [p, e as u64])
        .collect();
    if pp.len() < 2 {
        return Ok(CheckReport {
            n,
            check: CHECK_NAME,
            status: Status::HypothesisNotMet,
            details: json!({
                "reason": "n must have at least two distinct prime factors",
                "factors_ascending": ascending,
            }),
        });
    }
    let comparisons = neighborhood_comparisons(&g);
    Ok(CheckReport {
        n,
        check: CHECK_NAME,
        status: status_of(&comparisons),
        details: json!({
            "factors_descending": pp.iter().map(|&(p, e, _)| [p, e as u64]).collect::<Vec<_>>(),
            "factors_ascending": ascending,
            "comparisons": comparisons,
        }),
    })
}
