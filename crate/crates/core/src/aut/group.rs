//! Permutation groups represented by a stabilizer chain with explicit
//! transversals.

use std::collections::HashSet;

use num_bigint::BigUint;
use num_traits::One;
use rand::Rng;

use super::perm::Permutation;

#[derive(Debug, Clone)]
struct Level {
    point: u32,
    /// Strong generators fixing every earlier base point.
    gens: Vec<Permutation>,
    orbit: Vec<u32>,
    /// `reps[b]` maps `point` to `b`; `inv[b]` is its inverse.
    reps: Vec<Option<Permutation>>,
    inv: Vec<Option<Permutation>>,
    /// Schreier generators (orbit point, generator index) already shown to
    /// sift to the identity.
    checked: HashSet<(u32, usize)>,
}

impl Level {
    fn new(degree: usize, point: u32) -> Self {
        let mut reps = vec![None; degree];
        let mut inv = vec![None; degree];
        reps[point as usize] = Some(Permutation::identity(degree));
        inv[point as usize] = Some(Permutation::identity(degree));
        Level {
            point,
            gens: Vec::new(),
            orbit: vec![point],
            reps,
            inv,
            checked: HashSet::new(),
        }
    }

    /// Closes the orbit under `gens`, assuming it was closed under
    /// `gens[..first_new]` already.
    fn extend_orbit(&mut self, first_new: usize) {
        let old_len = if first_new == 0 { 0 } else { self.orbit.len() };
        let mut i = 0;
        while i < self.orbit.len() {
            let b = self.orbit[i];
            // Old points have already seen the old generators.
            let start = if i < old_len { first_new } else { 0 };
            for s in start..self.gens.len() {
                let c = self.gens[s].apply(b);
                if self.reps[c as usize].is_none() {
                    let u = self.reps[b as usize].as_ref().unwrap().then(&self.gens[s]);
                    self.inv[c as usize] = Some(u.inverse());
                    self.reps[c as usize] = Some(u);
                    self.orbit.push(c);
                }
            }
            i += 1;
        }
    }
}

/// Stabilizer chain for a permutation group on `0..degree`.
#[derive(Debug, Clone)]
pub struct StabilizerChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabilizerChain {
    pub fn trivial(degree: usize) -> Self {
        StabilizerChain {
            degree,
            levels: Vec::new(),
        }
    }

    /// Deterministic Schreier–Sims. New base points are the smallest point
    /// moved by the generator that forces a new level.
    pub fn from_generators(degree: usize, gens: &[Permutation]) -> Self {
        let mut chain = StabilizerChain::trivial(degree);
        for g in gens {
            chain.insert(g);
        }
        chain
    }

    /// Adds `g` to the group and restores completeness. Returns false when
    /// `g` was already a member.
    pub fn insert(&mut self, g: &Permutation) -> bool {
        assert_eq!(g.degree(), self.degree, "permutation degree mismatch");
        let (r, stop) = self.sift(g, 0);
        if r.is_identity() {
            return false;
        }
        self.add_strong(stop, r);
        self.complete_from(stop);
        true
    }

    /// Chain for a known base and strong generating set. Completeness is not
    /// re-checked here; see [`StabilizerChain::is_complete`].
    pub fn from_base_and_strong_generators(
        degree: usize,
        base: &[u32],
        strong: &[Permutation],
    ) -> Self {
        let mut levels = Vec::with_capacity(base.len());
        for (l, &b) in base.iter().enumerate() {
            let mut level = Level::new(degree, b);
            level.gens = strong
                .iter()
                .filter(|g| base[..l].iter().all(|&p| g.apply(p) == p))
                .cloned()
                .collect();
            level.extend_orbit(0);
            levels.push(level);
        }
        StabilizerChain { degree, levels }
    }

    fn add_strong(&mut self, j: usize, h: Permutation) {
        if j == self.levels.len() {
            let point = h.smallest_moved_point().expect("non-identity residue");
            self.levels.push(Level::new(self.degree, point));
        }
        for level in &mut self.levels[..=j] {
            let first_new = level.gens.len();
            level.gens.push(h.clone());
            level.extend_orbit(first_new);
        }
    }

    fn complete_from(&mut self, start: usize) {
        let mut i = start as isize;
        while i >= 0 {
            match self.first_failing_schreier(i as usize) {
                Some((h, stop)) => {
                    self.add_strong(stop, h);
                    i = stop as isize;
                }
                None => i -= 1,
            }
        }
    }

    fn first_failing_schreier(&mut self, i: usize) -> Option<(Permutation, usize)> {
        let mut k = 0;
        while k < self.levels[i].orbit.len() {
            let b = self.levels[i].orbit[k];
            for s in 0..self.levels[i].gens.len() {
                if self.levels[i].checked.contains(&(b, s)) {
                    continue;
                }
                let level = &self.levels[i];
                let g = &level.gens[s];
                let c = g.apply(b);
                let h = level.reps[b as usize]
                    .as_ref()
                    .unwrap()
                    .then(g)
                    .then(level.inv[c as usize].as_ref().unwrap());
                let (r, stop) = self.sift(&h, i + 1);
                if !r.is_identity() {
                    return Some((r, stop));
                }
                self.levels[i].checked.insert((b, s));
            }
            k += 1;
        }
        None
    }

    /// Strips `g` through the levels starting at `from`. Returns the residue
    /// and the level where it left the chain (`levels.len()` if it passed).
    fn sift(&self, g: &Permutation, from: usize) -> (Permutation, usize) {
        let mut g = g.clone();
        for (j, level) in self.levels.iter().enumerate().skip(from) {
            let b = g.apply(level.point);
            match &level.inv[b as usize] {
                Some(inv) => g = g.then(inv),
                None => return (g, j),
            }
        }
        (g, self.levels.len())
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && self.sift(g, 0).0.is_identity()
    }

    /// Every Schreier generator at every level sifts to the identity.
    pub fn is_complete(&self) -> bool {
        (0..self.levels.len()).all(|i| {
            let level = &self.levels[i];
            level.orbit.iter().all(|&b| {
                level.gens.iter().all(|g| {
                    let c = g.apply(b);
                    let h = level.reps[b as usize]
                        .as_ref()
                        .unwrap()
                        .then(g)
                        .then(level.inv[c as usize].as_ref().unwrap());
                    self.sift(&h, i + 1).0.is_identity()
                })
            })
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.point).collect()
    }

    pub fn transversal_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::one(), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    /// Uniformly random element: one random coset representative per level.
    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> Permutation {
        let mut g = Permutation::identity(self.degree);
        for level in self.levels.iter().rev() {
            let b = level.orbit[rng.gen_range(0..level.orbit.len())];
            g = g.then(level.reps[b as usize].as_ref().unwrap());
        }
        g
    }
}

/// A permutation group with its generators and stabilizer chain.
#[derive(Debug, Clone)]
pub struct PermutationGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: StabilizerChain,
}

impl PermutationGroup {
    pub fn from_generators(degree: usize, generators: Vec<Permutation>) -> Self {
        let chain = StabilizerChain::from_generators(degree, &generators);
        PermutationGroup {
            degree,
            generators,
            chain,
        }
    }

    pub(crate) fn from_parts(
        degree: usize,
        generators: Vec<Permutation>,
        chain: StabilizerChain,
    ) -> Self {
        PermutationGroup {
            degree,
            generators,
            chain,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn chain(&self) -> &StabilizerChain {
        &self.chain
    }

    pub fn order(&self) -> BigUint {
        self.chain.order()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.chain.contains(g)
    }

    /// Product of `len` generators chosen at random.
    pub fn random_word<R: Rng + ?Sized>(&self, rng: &mut R, len: usize) -> Permutation {
        let mut g = Permutation::identity(self.degree);
        if self.generators.is_empty() {
            return g;
        }
        for _ in 0..len {
            g = g.then(&self.generators[rng.gen_range(0..self.generators.len())]);
        }
        g
    }
}

pub fn group_order(g: &PermutationGroup) -> BigUint {
    g.order()
}
