//! Closed-form order of the automorphism group of the power graph of Z_n.
//!
//! For `n` not a prime power the group is a direct product of symmetric
//! groups: one `S_phi(d)` per proper divisor `1 < d < n`, and one
//! `S_(phi(n)+1)` on the generators together with the identity. For a prime
//! power the graph is complete and the group is `S_n`.

use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;

use crate::arithmetic::{factorize, DivisorLattice};
use crate::aut::factorial;
use crate::error::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Branch {
    PrimePower,
    General,
}

impl Branch {
    pub fn name(self) -> &'static str {
        match self {
            Branch::PrimePower => "prime-power",
            Branch::General => "general",
        }
    }
}

impl std::fmt::Display for Branch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutDecomposition {
    pub n: u64,
    pub branch: Branch,
    /// `(d, phi(d))` for every divisor `1 < d < n`, ascending. Empty on the
    /// prime-power branch.
    pub factors: Vec<(u64, u64)>,
    /// Degree of the last symmetric factor: `phi(n) + 1` in general, `n` on
    /// the prime-power branch. Either way the degrees sum to `n`.
    pub top_factor: u64,
    pub order: BigUint,
}

impl AutDecomposition {
    /// JSON form with the order as a decimal string.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "branch": self.branch,
            "factors": self.factors.iter().map(|&(d, k)| [d, k]).collect::<Vec<_>>(),
            "top_factor": self.top_factor,
            "order": self.order.to_string(),
        })
    }
}

pub fn aut_order_formula(n: u64) -> Result<AutDecomposition> {
    let f = factorize(n)?;
    if f.is_prime_power() {
        return Ok(AutDecomposition {
            n,
            branch: Branch::PrimePower,
            factors: Vec::new(),
            top_factor: n,
            order: factorial(n),
        });
    }
    let lat = DivisorLattice::new(&f);
    let factors: Vec<(u64, u64)> = (1..lat.len() - 1)
        .map(|i| (lat.divisors()[i], lat.phi(i)))
        .collect();
    let top_factor = f.phi() + 1;
    let order = factors
        .iter()
        .fold(BigUint::one(), |acc, &(_, k)| acc * factorial(k))
        * factorial(top_factor);
    Ok(AutDecomposition {
        n,
        branch: Branch::General,
        factors,
        top_factor,
        order,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn formula_examples() {
        let d6 = aut_order_formula(6).unwrap();
        assert_eq!(d6.branch, Branch::General);
        assert_eq!(d6.factors, vec![(2, 1), (3, 2)]);
        assert_eq!(d6.top_factor, 3);
        assert_eq!(d6.order, BigUint::from(12u32));

        let d4 = aut_order_formula(4).unwrap();
        assert_eq!(d4.branch, Branch::PrimePower);
        assert_eq!(d4.order, BigUint::from(24u32));

        let d12 = aut_order_formula(12).unwrap();
        assert_eq!(d12.factors, vec![(2, 1), (3, 2), (4, 2), (6, 2)]);
        assert_eq!(d12.top_factor, 5);
        assert_eq!(d12.order, BigUint::from(960u32));
    }

    #[test]
    fn trivial_and_prime_cases() {
        let d1 = aut_order_formula(1).unwrap();
        assert_eq!(d1.branch, Branch::PrimePower);
        assert_eq!(d1.order, BigUint::one());
        assert_eq!(d1.top_factor, 1);
        assert_eq!(aut_order_formula(7).unwrap().order, BigUint::from(5040u32));
        assert_eq!(aut_order_formula(0).unwrap_err(), Error::Zero);
    }

    #[test]
    fn degrees_partition_the_vertices() {
        for n in 1..=3000u64 {
            let d = aut_order_formula(n).unwrap();
            let total: u64 = d.factors.iter().map(|&(_, k)| k).sum::<u64>() + d.top_factor;
            assert_eq!(total, n, "n={n}");
        }
    }

    #[test]
    fn json_shape() {
        let v = aut_order_formula(6).unwrap().to_json();
        assert_eq!(v["factors"], serde_json::json!([[2, 1], [3, 2]]));
        assert_eq!(v["top_factor"], 3);
        assert_eq!(v["order"], "12");
        assert_eq!(v["branch"], "general");
    }
}
