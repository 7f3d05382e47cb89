//! An explicit injection from the nonempty subsets of `B = {m_2..m_k}` into
//! the proper subsets of `A = {m_1..m_k; m}` that contain both `m_1` and `m`,
//! with `prod(S_B) < prod(S_A \ {m})` on every pair.
//!
//! `A` is stored as slots: slot `i` holds `m_(i+1)` and a separate marker slot
//! holds `m`, so `m` may coincide numerically with some `m_i`. Subsets of the
//! element slots are bitmasks; every image contains slot 0 and the marker,
//! so only the element mask is stored.
//!
//! The map is built level by level. On `m_1..m_j` with `m_(j+1)` acting as the
//! marker, a subset not containing `m_(j+1)` keeps its image (the marker is
//! renamed to `m`); adding `m_(j+1)` to a subset adds it to the image; and
//! `{m_(j+1)}` takes the one admissible mask left unused.

use num_bigint::BigUint;
use num_traits::One;
use serde_json::{json, Number, Value};

use crate::error::{Error, Result};

/// Largest `k` for which the full map (`2^(k-1) - 1` pairs) is enumerated.
pub const MAX_ENUMERATED: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InjectionInstance {
    ms: Vec<u64>,
    m: u64,
}

impl InjectionInstance {
    /// `ms` must be strictly decreasing, positive and of length at least 2.
    pub fn new(ms: Vec<u64>, m: u64) -> Result<Self> {
        if ms.len() < 2 {
            return Err(Error::InvalidInstance(format!(
                "need at least two values, got {}",
                ms.len()
            )));
        }
        if ms.len() > MAX_ENUMERATED {
            return Err(Error::InstanceTooLarge {
                requested: ms.len(),
                cap: MAX_ENUMERATED,
            });
        }
        if ms.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::InvalidInstance(
                "values must be strictly decreasing".into(),
            ));
        }
        if ms[ms.len() - 1] == 0 || m == 0 {
            return Err(Error::InvalidInstance("values must be positive".into()));
        }
        Ok(InjectionInstance { ms, m })
    }

    pub fn ms(&self) -> &[u64] {
        &self.ms
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    /// Number of `m_i`; `A` has one more slot, `B` one fewer.
    pub fn len(&self) -> usize {
        self.ms.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn b_values(&self) -> &[u64] {
        &self.ms[1..]
    }

    /// Converts values of `B` to a slot mask.
    pub fn subset_of_b(&self, values: &[u64]) -> Result<u64> {
        if values.is_empty() {
            return Err(Error::InvalidSubset("subset of B must be nonempty".into()));
        }
        let mut mask = 0u64;
        for &v in values {
            let slot = self.ms[1..]
                .iter()
                .position(|&x| x == v)
                .ok_or_else(|| Error::InvalidSubset(format!("{v} is not in B")))?;
            mask |= 1 << (slot + 1);
        }
        Ok(mask)
    }

    fn values_of(&self, mask: u64) -> Vec<u64> {
        (0..self.ms.len())
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| self.ms[i])
            .collect()
    }

    fn product(&self, mask: u64) -> BigUint {
        self.values_of(mask)
            .into_iter()
            .fold(BigUint::one(), |acc, v| acc * BigUint::from(v))
    }
}

/// An image `S_A`: the element slots in `elements` plus the marker.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ImageSet {
    pub elements: u64,
}

impl ImageSet {
    /// Values in slot order, then `m`.
    pub fn values(&self, inst: &InjectionInstance) -> Vec<u64> {
        let mut v = inst.values_of(self.elements);
        v.push(inst.m);
        v
    }

    pub fn contains_first(&self) -> bool {
        self.elements & 1 == 1
    }

    /// Proper in `A` iff some element slot is missing (the marker is always
    /// present).
    pub fn is_proper(&self, inst: &InjectionInstance) -> bool {
        self.elements != full_mask(inst.len())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Association {
    /// Slot mask of `S_B`; bit 0 is never set.
    pub from: u64,
    pub to: ImageSet,
    /// `prod(S_B)`.
    pub lhs: BigUint,
    /// `prod(S_A \ {m})`.
    pub rhs: BigUint,
}

fn full_mask(k: usize) -> u64 {
    (1u64 << k) - 1
}

/// The one admissible mask on slots `0..=j` (contains slot 0, not all
/// slots) missing from `table`, which must already hold the images of every
/// nonempty subset of slots `1..=j`, except `{j}` itself.
fn leftover(table: &[u64], j: usize) -> u64 {
    let mut used = vec![false; 1 << (j + 1)];
    for s in (2..1usize << (j + 1)).step_by(2) {
        if s != 1 << j {
            used[table[s] as usize] = true;
        }
    }
    let all = full_mask(j + 1) as usize;
    let mut free = (1..all).step_by(2).filter(|&c| !used[c]);
    let c = free.next().expect("counting leaves one admissible mask");
    debug_assert!(free.next().is_none());
    c as u64
}

/// Image table indexed by domain mask, for the first `k` slots.
fn image_table(k: usize) -> Vec<u64> {
    let mut table = vec![0u64; 1 << k];
    table[0b10] = 0b1;
    for j in 2..k {
        for s in (2..1usize << j).step_by(2) {
            table[s | 1 << j] = table[s] | 1 << j;
        }
        table[1 << j] = leftover(&table, j);
    }
    table
}

fn associate_mask(s: u64, level: usize) -> u64 {
    if level == 2 {
        return 0b1;
    }
    let j = level - 1;
    let bit = 1u64 << j;
    if s & bit == 0 {
        associate_mask(s, level - 1)
    } else if s == bit {
        let mut table = image_table(j);
        table.resize(1 << (j + 1), 0);
        for t in (2..1usize << j).step_by(2) {
            table[t | 1 << j] = table[t] | 1 << j;
        }
        leftover(&table, j)
    } else {
        associate_mask(s & !bit, level - 1) | bit
    }
}

/// Image of one subset of `B`, given by value.
pub fn associate(inst: &InjectionInstance, s_b: &[u64]) -> Result<ImageSet> {
    let s = inst.subset_of_b(s_b)?;
    Ok(ImageSet {
        elements: associate_mask(s, inst.len()),
    })
}

/// Every pair, by ascending domain mask.
pub fn full_map(inst: &InjectionInstance) -> Vec<Association> {
    let k = inst.len();
    let table = image_table(k);
    (2..1u64 << k)
        .step_by(2)
        .map(|s| Association {
            from: s,
            to: ImageSet {
                elements: table[s as usize],
            },
            lhs: inst.product(s),
            rhs: inst.product(table[s as usize]),
        })
        .collect()
}

/// Problems with a claimed map, or an empty list.
pub fn verify_map(inst: &InjectionInstance, map: &[Association]) -> Vec<String> {
    let k = inst.len();
    let expected = (1usize << (k - 1)) - 1;
    let mut problems = Vec::new();
    if map.len() != expected {
        problems.push(format!(
            "domain has {} subsets, expected {expected}",
            map.len()
        ));
    }
    let mut images: Vec<u64> = map.iter().map(|a| a.to.elements).collect();
    images.sort_unstable();
    images.dedup();
    if images.len() != map.len() {
        problems.push("two subsets share an image".into());
    }
    for a in map {
        let from = inst.values_of(a.from);
        if !a.to.contains_first() {
            problems.push(format!("image of {from:?} misses m_1"));
        }
        if !a.to.is_proper(inst) {
            problems.push(format!("image of {from:?} is all of A"));
        }
        if a.lhs >= a.rhs {
            problems.push(format!(
                "product inequality fails for {from:?}: {} >= {}",
                a.lhs, a.rhs
            ));
        }
    }
    problems
}

fn big_number(x: &BigUint) -> Value {
    Value::Number(x.to_string().parse::<Number>().expect("decimal digits"))
}

/// `[{"from": [..], "to": [..], "lhs": int, "rhs": int}, ...]`.
pub fn map_to_json(inst: &InjectionInstance, map: &[Association]) -> Value {
    Value::Array(
        map.iter()
            .map(|a| {
                json!({
                    "from": inst.values_of(a.from),
                    "to": a.to.values(inst),
                    "lhs": big_number(&a.lhs),
                    "rhs": big_number(&a.rhs),
                })
            })
            .collect(),
    )
}
