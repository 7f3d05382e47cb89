//! Ordered partitions and equitable refinement (1-dimensional
//! Weisfeiler–Leman on cell neighbor counts).

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// An ordered sequence of disjoint, nonempty cells covering `0..N`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrderedPartition {
    cells: Vec<Vec<u32>>,
}

impl OrderedPartition {
    pub fn new(n: usize, cells: Vec<Vec<u32>>) -> Result<Self> {
        let mut seen = vec![false; n];
        for cell in &cells {
            if cell.is_empty() {
                return Err(Error::InvalidPartition("empty cell".into()));
            }
            for &v in cell {
                if v as usize >= n || seen[v as usize] {
                    return Err(Error::InvalidPartition(format!(
                        "vertex {v} repeated or out of range"
                    )));
                }
                seen[v as usize] = true;
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::InvalidPartition(
                "cells do not cover every vertex".into(),
            ));
        }
        Ok(OrderedPartition { cells })
    }

    pub fn unit(n: usize) -> Self {
        let cells = if n == 0 {
            vec![]
        } else {
            vec![(0..n as u32).collect()]
        };
        OrderedPartition { cells }
    }

    pub fn discrete(n: usize) -> Self {
        OrderedPartition {
            cells: (0..n as u32).map(|v| vec![v]).collect(),
        }
    }

    pub fn cells(&self) -> &[Vec<u32>] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn vertex_count(&self) -> usize {
        self.cells.iter().map(Vec::len).sum()
    }

    pub fn is_discrete(&self) -> bool {
        self.cells.iter().all(|c| c.len() == 1)
    }

    /// Same cells regardless of order and member order.
    pub fn same_cells(&self, other: &OrderedPartition) -> bool {
        let norm = |p: &OrderedPartition| {
            let mut cells: Vec<Vec<u32>> = p
                .cells
                .iter()
                .map(|c| {
                    let mut c = c.clone();
                    c.sort_unstable();
                    c
                })
                .collect();
            cells.sort();
            cells
        };
        norm(self) == norm(other)
    }

    /// Every vertex of a cell has the same number of neighbors in every cell.
    pub fn is_equitable(&self, g: &Graph) -> bool {
        let n = self.vertex_count();
        let mut cell_of = vec![0usize; n];
        for (i, c) in self.cells.iter().enumerate() {
            for &v in c {
                cell_of[v as usize] = i;
            }
        }
        self.cells.iter().all(|cell| {
            let profile = |v: u32| {
                let mut counts = vec![0usize; self.cells.len()];
                for &w in g.neighbors(v as usize) {
                    counts[cell_of[w as usize]] += 1;
                }
                counts
            };
            let first = profile(cell[0]);
            cell.iter().skip(1).all(|&v| profile(v) == first)
        })
    }
}

/// Working representation used during search: vertices laid out in cell
/// order, each cell identified by its start position.
#[derive(Debug, Clone)]
pub(crate) struct CellPartition {
    pub elems: Vec<u32>,
    pos: Vec<u32>,
    /// Start position of the cell holding each vertex.
    cell_of: Vec<u32>,
    /// `end[s]` is one past the last position of the cell starting at `s`.
    end: Vec<u32>,
    cells: usize,
}

#[inline]
fn mix(h: u64, x: u64) -> u64 {
    (h ^ x).wrapping_mul(0x100_0000_01b3).rotate_left(5)
}

impl CellPartition {
    pub fn from_ordered(p: &OrderedPartition, n: usize) -> Self {
        let mut elems = Vec::with_capacity(n);
        let mut cell_of = vec![0u32; n];
        let mut end = vec![0u32; n];
        for cell in p.cells() {
            let start = elems.len() as u32;
            let mut sorted = cell.clone();
            sorted.sort_unstable();
            for &v in &sorted {
                cell_of[v as usize] = start;
                elems.push(v);
            }
            end[start as usize] = elems.len() as u32;
        }
        let mut pos = vec![0u32; n];
        for (i, &v) in elems.iter().enumerate() {
            pos[v as usize] = i as u32;
        }
        CellPartition {
            elems,
            pos,
            cell_of,
            end,
            cells: p.len(),
        }
    }

    pub fn to_ordered(&self) -> OrderedPartition {
        let mut cells = Vec::with_capacity(self.cells);
        let mut s = 0usize;
        while s < self.elems.len() {
            let e = self.end[s] as usize;
            cells.push(self.elems[s..e].to_vec());
            s = e;
        }
        OrderedPartition { cells }
    }

    pub fn cell_starts(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.cells);
        let mut s = 0usize;
        while s < self.elems.len() {
            out.push(s as u32);
            s = self.end[s] as usize;
        }
        out
    }

    pub fn is_discrete(&self) -> bool {
        self.cells == self.elems.len()
    }

    pub fn cell_range(&self, start: u32) -> std::ops::Range<usize> {
        start as usize..self.end[start as usize] as usize
    }

    /// First cell of maximum size among non-singletons.
    pub fn target_cell(&self) -> Option<u32> {
        let mut best: Option<(u32, u32)> = None;
        let mut s = 0usize;
        while s < self.elems.len() {
            let e = self.end[s] as usize;
            let size = (e - s) as u32;
            if size > 1 && best.is_none_or(|(_, bs)| size > bs) {
                best = Some((s as u32, size));
            }
            s = e;
        }
        best.map(|(s, _)| s)
    }

    /// Moves `v` into a new singleton cell at the front of its cell. Returns
    /// the start of the singleton.
    pub fn individualize(&mut self, v: u32) -> u32 {
        let s = self.cell_of[v as usize];
        let e = self.end[s as usize];
        let p = self.pos[v as usize];
        // Shift members before v one slot right to keep ascending order.
        for i in (s..p).rev() {
            let w = self.elems[i as usize];
            self.elems[i as usize + 1] = w;
            self.pos[w as usize] = i + 1;
        }
        self.elems[s as usize] = v;
        self.pos[v as usize] = s;
        self.end[s as usize] = s + 1;
        if s + 1 < e {
            self.end[s as usize + 1] = e;
            for i in s + 1..e {
                self.cell_of[self.elems[i as usize] as usize] = s + 1;
            }
            self.cells += 1;
        }
        s
    }

    /// Refines to the coarsest equitable partition finer than the current
    /// one, given that the current partition is equitable with respect to
    /// every cell not in `splitters`. Returns a hash of the split trace; it
    /// depends only on cell positions and counts, so relabeled inputs give
    /// equal traces.
    pub fn refine(&mut self, g: &Graph, splitters: &[u32], scratch: &mut Scratch) -> u64 {
        let n = self.elems.len();
        scratch.ensure(n);
        let mut queue: VecDeque<u32> = VecDeque::new();
        for &s in splitters {
            if !scratch.in_queue[s as usize] {
                scratch.in_queue[s as usize] = true;
                queue.push_back(s);
            }
        }
        let mut trace = 0xcbf2_9ce4_8422_2325u64;
        while let Some(w) = queue.pop_front() {
            scratch.in_queue[w as usize] = false;
            if self.is_discrete() {
                continue;
            }
            // Count neighbors inside the splitter cell.
            let mut touched_cells: Vec<u32> = Vec::new();
            let mut touched: Vec<u32> = Vec::new();
            for i in self.cell_range(w) {
                let x = self.elems[i];
                for &y in g.neighbors(x as usize) {
                    if scratch.count[y as usize] == 0 {
                        touched.push(y);
                        let c = self.cell_of[y as usize];
                        if !scratch.cell_touched[c as usize] {
                            scratch.cell_touched[c as usize] = true;
                            touched_cells.push(c);
                        }
                    }
                    scratch.count[y as usize] += 1;
                }
            }
            touched_cells.sort_unstable();
            trace = mix(trace, w as u64);
            for &c in &touched_cells {
                scratch.cell_touched[c as usize] = false;
                let range = self.cell_range(c);
                let size = range.len();
                let first = scratch.count[self.elems[range.start] as usize];
                if size == 1
                    || self.elems[range.clone()]
                        .iter()
                        .all(|&v| scratch.count[v as usize] == first)
                {
                    trace = mix(trace, (c as u64) << 32 | first as u64);
                    continue;
                }
                // Descending count, then ascending vertex.
                let seg = &mut self.elems[range.clone()];
                seg.sort_unstable_by(|&a, &b| {
                    scratch.count[b as usize]
                        .cmp(&scratch.count[a as usize])
                        .then(a.cmp(&b))
                });
                let was_queued = scratch.in_queue[c as usize];
                let mut frags: Vec<(u32, u32)> = Vec::new();
                let mut i = range.start;
                while i < range.end {
                    let k = scratch.count[self.elems[i] as usize];
                    let mut j = i + 1;
                    while j < range.end && scratch.count[self.elems[j] as usize] == k {
                        j += 1;
                    }
                    frags.push((i as u32, j as u32));
                    trace = mix(trace, (i as u64) << 40 | (j as u64) << 16 | k as u64);
                    i = j;
                }
                for &(fs, fe) in &frags {
                    self.end[fs as usize] = fe;
                    for p in fs..fe {
                        let v = self.elems[p as usize];
                        self.pos[v as usize] = p;
                        self.cell_of[v as usize] = fs;
                    }
                }
                self.cells += frags.len() - 1;
                if was_queued {
                    for &(fs, _) in &frags[1..] {
                        scratch.in_queue[fs as usize] = true;
                        queue.push_back(fs);
                    }
                } else {
                    let largest = frags
                        .iter()
                        .enumerate()
                        .max_by(|(ia, a), (ib, b)| (a.1 - a.0).cmp(&(b.1 - b.0)).then(ib.cmp(ia)))
                        .map(|(i, _)| i)
                        .unwrap();
                    for (idx, &(fs, _)) in frags.iter().enumerate() {
                        if idx != largest {
                            scratch.in_queue[fs as usize] = true;
                            queue.push_back(fs);
                        }
                    }
                }
            }
            for &y in &touched {
                scratch.count[y as usize] = 0;
            }
        }
        mix(trace, self.cells as u64)
    }
}

/// Reusable buffers for [`CellPartition::refine`].
#[derive(Debug, Default)]
pub(crate) struct Scratch {
    count: Vec<u32>,
    cell_touched: Vec<bool>,
    in_queue: Vec<bool>,
}

impl Scratch {
    fn ensure(&mut self, n: usize) {
        if self.count.len() < n {
            self.count.resize(n, 0);
            self.cell_touched.resize(n, false);
            self.in_queue.resize(n, false);
        }
    }
}

/// Coarsest equitable refinement of `partition`. Cells split in place;
/// fragments are ordered by descending neighbor count into the splitter.
pub fn refine(g: &Graph, partition: &OrderedPartition) -> Result<OrderedPartition> {
    let n = g.vertex_count();
    if partition.vertex_count() != n {
        return Err(Error::InvalidPartition(format!(
            "partition covers {} vertices, graph has {n}",
            partition.vertex_count()
        )));
    }
    let mut cp = CellPartition::from_ordered(partition, n);
    let starts = cp.cell_starts();
    cp.refine(g, &starts, &mut Scratch::default());
    Ok(cp.to_ordered())
}
