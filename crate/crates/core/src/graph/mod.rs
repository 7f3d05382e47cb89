//! Simple undirected graphs with a dense adjacency bitset and sorted
//! neighbor lists.

pub mod io;

use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Finite simple undirected graph on vertices `0..n`.
///
/// The bitset is authoritative. Neighbor lists are derived from it on first
/// use, so building a graph only to query a few rows stays cheap.
#[derive(Debug)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
    edge_count: usize,
    neighbors: OnceLock<Csr>,
}

#[derive(Debug, Clone)]
struct Csr {
    offsets: Vec<usize>,
    targets: Vec<u32>,
}

impl Clone for Graph {
    fn clone(&self) -> Self {
        Graph {
            n: self.n,
            words: self.words,
            bits: self.bits.clone(),
            edge_count: self.edge_count,
            neighbors: self.neighbors.clone(),
        }
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.bits == other.bits
    }
}

impl Eq for Graph {}

pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        let words = words_for(n);
        Graph {
            n,
            words,
            bits: vec![0; words * n],
            edge_count: 0,
            neighbors: OnceLock::new(),
        }
    }

    /// Builds a graph from an edge list. Duplicate edges are merged; loops and
    /// out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge {u}-{v} out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at {u}")));
            }
            g.set_edge(u, v, true);
        }
        Ok(g)
    }

    /// Takes a dense row-major bitset with `ceil(n/64)` words per row. The
    /// diagonal is cleared; symmetry is the caller's obligation.
    pub(crate) fn from_rows(n: usize, mut bits: Vec<u64>) -> Result<Self> {
        let words = words_for(n);
        if bits.len() != words * n {
            return Err(Error::InvalidGraph("bitset has the wrong length".into()));
        }
        for v in 0..n {
            bits[v * words + v / 64] &= !(1u64 << (v % 64));
        }
        let ones: usize = bits.iter().map(|w| w.count_ones() as usize).sum();
        Ok(Graph {
            n,
            words,
            bits,
            edge_count: ones / 2,
            neighbors: OnceLock::new(),
        })
    }

    fn set_edge(&mut self, u: usize, v: usize, on: bool) {
        let was = self.has_edge(u, v);
        if was == on {
            return;
        }
        let (bu, bv) = (1u64 << (v % 64), 1u64 << (u % 64));
        if on {
            self.bits[u * self.words + v / 64] |= bu;
            self.bits[v * self.words + u / 64] |= bv;
            self.edge_count += 1;
        } else {
            self.bits[u * self.words + v / 64] &= !bu;
            self.bits[v * self.words + u / 64] &= !bv;
            self.edge_count -= 1;
        }
        self.neighbors = OnceLock::new();
    }

    /// Copy of this graph with the adjacency of `u` and `v` flipped.
    pub fn with_toggled_edge(&self, u: usize, v: usize) -> Result<Self> {
        if u >= self.n || v >= self.n || u == v {
            return Err(Error::InvalidGraph(format!("cannot toggle {u}-{v}")));
        }
        let mut g = Graph {
            n: self.n,
            words: self.words,
            bits: self.bits.clone(),
            edge_count: self.edge_count,
            neighbors: OnceLock::new(),
        };
        let on = !g.has_edge(u, v);
        g.set_edge(u, v, on);
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    /// Raw adjacency row of `v` (open neighborhood).
    pub fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    /// Closed neighborhood `N[v]` as a bitset.
    pub fn closed_row(&self, v: usize) -> Vec<u64> {
        let mut r = self.row(v).to_vec();
        r[v / 64] |= 1u64 << (v % 64);
        r
    }

    fn row_iter(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v).iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + b)
            })
        })
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: usize) -> &[u32] {
        let csr = self.neighbors.get_or_init(|| {
            let mut offsets = Vec::with_capacity(self.n + 1);
            let mut targets = Vec::with_capacity(2 * self.edge_count);
            offsets.push(0);
            for u in 0..self.n {
                targets.extend(self.row_iter(u).map(|x| x as u32));
                offsets.push(targets.len());
            }
            Csr { offsets, targets }
        });
        &csr.targets[csr.offsets[v]..csr.offsets[v + 1]]
    }

    /// Edges `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.row_iter(u)
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// True if `images` (a bijection on the vertex set) preserves adjacency.
    pub fn is_automorphism(&self, images: &[u32]) -> bool {
        if images.len() != self.n {
            return false;
        }
        (0..self.n).all(|u| {
            let iu = images[u] as usize;
            self.degree(iu) == self.degree(u)
                && self
                    .neighbors(u)
                    .iter()
                    .all(|&v| self.has_edge(iu, images[v as usize] as usize))
        })
    }

    pub fn complete(n: usize) -> Self {
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        Graph::from_edges(n, (0..n).map(|u| (u, (u + 1) % n))).unwrap()
    }

    pub fn path(n: usize) -> Self {
        Graph::from_edges(n, (1..n).map(|u| (u - 1, u))).unwrap()
    }

    pub fn petersen() -> Self {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        Graph::from_edges(10, outer.chain(spokes).chain(inner)).unwrap()
    }
}
