//! Individualization-refinement search for the automorphism group.
//!
//! The leftmost path of the search tree is walked first; its individualized
//! vertices form the base. Levels are then revisited deepest first. At level
//! `k` every vertex of the target cell that is not already in the orbit of
//! the first-path vertex (under the automorphisms found so far, all of which
//! fix the earlier base points) gets its subtree searched for a leaf that
//! matches the first leaf. A match yields an automorphism fixing the first
//! `k - 1` base points, so the collected generators form a strong generating
//! set relative to the base and the chain needs no Schreier sifting.

use num_bigint::BigUint;
use num_traits::One;

use super::group::{PermutationGroup, StabilizerChain};
use super::partition::{CellPartition, OrderedPartition, Scratch};
use super::perm::Permutation;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    /// Search-tree nodes allowed before giving up with `BudgetExceeded`.
    pub node_budget: u64,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            node_budget: DEFAULT_NODE_BUDGET,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes: u64,
    pub leaves: u64,
    pub bad_leaves: u64,
    pub pruned_by_orbit: u64,
    pub pruned_by_trace: u64,
}

#[derive(Debug, Clone)]
pub struct SearchResult {
    pub group: PermutationGroup,
    pub stats: SearchStats,
    /// Orbit length of each base point in the stabilizer of the earlier
    /// ones, as seen by the search itself.
    pub orbit_lengths: Vec<usize>,
}

impl SearchResult {
    pub fn orbit_product(&self) -> BigUint {
        self.orbit_lengths
            .iter()
            .fold(BigUint::one(), |acc, &l| acc * BigUint::from(l))
    }
}

struct Orbits {
    parent: Vec<u32>,
}

impl Orbits {
    fn new(n: usize) -> Self {
        Orbits {
            parent: (0..n as u32).collect(),
        }
    }

    fn find(&mut self, mut v: u32) -> u32 {
        while self.parent[v as usize] != v {
            let p = self.parent[v as usize];
            self.parent[v as usize] = self.parent[p as usize];
            v = p;
        }
        v
    }

    fn join(&mut self, p: &Permutation) {
        for v in 0..p.degree() as u32 {
            let (a, b) = (self.find(v), self.find(p.apply(v)));
            if a != b {
                let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                self.parent[hi as usize] = lo;
            }
        }
    }

    fn size_of(&mut self, v: u32) -> usize {
        let r = self.find(v);
        (0..self.parent.len() as u32)
            .filter(|&u| self.find(u) == r)
            .count()
    }
}

struct Search<'g> {
    g: &'g Graph,
    budget: u64,
    scratch: Scratch,
    stats: SearchStats,
    /// Trace of each first-path node, by depth (index 0 is the root).
    traces: Vec<u64>,
    first_leaf: Vec<u32>,
}

impl Search<'_> {
    fn tick(&mut self) -> Result<()> {
        self.stats.nodes += 1;
        if self.stats.nodes > self.budget {
            return Err(Error::BudgetExceeded {
                budget: self.budget,
            });
        }
        Ok(())
    }

    /// Child of `node` with `v` individualized, or `None` if its trace
    /// differs from the first path at `depth`.
    fn child(
        &mut self,
        node: &CellPartition,
        v: u32,
        depth: usize,
    ) -> Result<Option<CellPartition>> {
        self.tick()?;
        if depth >= self.traces.len() {
            self.stats.pruned_by_trace += 1;
            return Ok(None);
        }
        let mut c = node.clone();
        let s = c.individualize(v);
        let tr = c.refine(self.g, &[s], &mut self.scratch);
        if tr != self.traces[depth] {
            self.stats.pruned_by_trace += 1;
            return Ok(None);
        }
        Ok(Some(c))
    }

    fn leaf_automorphism(&mut self, leaf: &CellPartition) -> Option<Permutation> {
        self.stats.leaves += 1;
        let mut images = vec![0u32; leaf.elems.len()];
        for (i, &v) in self.first_leaf.iter().enumerate() {
            images[v as usize] = leaf.elems[i];
        }
        if self.g.is_automorphism(&images) {
            Some(Permutation::from_images_unchecked(images))
        } else {
            self.stats.bad_leaves += 1;
            None
        }
    }

    /// Depth-first search below `node` (at `depth`) for a leaf matching the
    /// first leaf.
    fn find_match(&mut self, node: &CellPartition, depth: usize) -> Result<Option<Permutation>> {
        if node.is_discrete() {
            return Ok(self.leaf_automorphism(node));
        }
        let t = node.target_cell().expect("non-discrete has a target");
        let members: Vec<u32> = node.elems[node.cell_range(t)].to_vec();
        for u in members {
            if let Some(c) = self.child(node, u, depth + 1)? {
                if let Some(p) = self.find_match(&c, depth + 1)? {
                    return Ok(Some(p));
                }
            }
        }
        Ok(None)
    }
}

/// Automorphism group with the default node budget.
pub fn automorphism_group(g: &Graph) -> Result<PermutationGroup> {
    Ok(search_automorphisms(g, SearchOptions::default())?.group)
}

pub fn search_automorphisms(g: &Graph, opts: SearchOptions) -> Result<SearchResult> {
    let n = g.vertex_count();
    let mut search = Search {
        g,
        budget: opts.node_budget,
        scratch: Scratch::default(),
        stats: SearchStats::default(),
        traces: Vec::new(),
        first_leaf: Vec::new(),
    };
    search.tick()?;
    let mut root = CellPartition::from_ordered(&OrderedPartition::unit(n), n);
    let starts = root.cell_starts();
    let tr = root.refine(g, &starts, &mut search.scratch);
    search.traces.push(tr);

    // Leftmost path: (node, target cell start) per level.
    let mut path: Vec<(CellPartition, u32)> = Vec::new();
    let mut node = root;
    while let Some(t) = node.target_cell() {
        search.tick()?;
        let v = node.elems[t as usize];
        let mut c = node.clone();
        let s = c.individualize(v);
        let tr = c.refine(g, &[s], &mut search.scratch);
        search.traces.push(tr);
        path.push((node, t));
        node = c;
    }
    search.first_leaf = node.elems.clone();

    let mut gens: Vec<Permutation> = Vec::new();
    let mut orbits = Orbits::new(n);
    let mut orbit_lengths = vec![0usize; path.len()];
    for k in (0..path.len()).rev() {
        let (parent, t) = &path[k];
        let members: Vec<u32> = parent.elems[parent.cell_range(*t)].to_vec();
        let base_point = members[0];
        let mut failed: Vec<u32> = Vec::new();
        for &w in &members[1..] {
            let rw = orbits.find(w);
            if rw == orbits.find(base_point) || failed.iter().any(|&f| orbits.find(f) == rw) {
                search.stats.pruned_by_orbit += 1;
                continue;
            }
            let found = match search.child(parent, w, k + 1)? {
                Some(c) => search.find_match(&c, k + 1)?,
                None => None,
            };
            match found {
                Some(p) => {
                    orbits.join(&p);
                    gens.push(p);
                }
                None => failed.push(w),
            }
        }
        orbit_lengths[k] = orbits.size_of(base_point);
    }

    let base: Vec<u32> = path.iter().map(|(p, t)| p.elems[*t as usize]).collect();
    let chain = StabilizerChain::from_base_and_strong_generators(n, &base, &gens);
    debug_assert_eq!(chain.transversal_sizes(), orbit_lengths);
    Ok(SearchResult {
        group: PermutationGroup::from_parts(n, gens, chain),
        stats: search.stats,
        orbit_lengths,
    })
}
