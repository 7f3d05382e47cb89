//! The undirected power graph of the cyclic group Z_n.
//!
//! Z_n is written additively, so "y is a positive power of x" means
//! `y = k·x mod n` for some `k >= 1`. In a cyclic group that holds exactly
//! when `order(y) | order(x)`, which is the rule the builder uses.

use std::collections::BTreeMap;

use crate::arithmetic::{factorize, gcd, DivisorLattice, Factorization};
use crate::error::{Error, Result};
use crate::graph::io::{write_graph, Format};
use crate::graph::{words_for, Graph};

pub const DEFAULT_MAX_VERTICES: u64 = 100_000;

#[derive(Debug, Clone)]
pub struct PowerGraph {
    n: u64,
    factorization: Factorization,
    lattice: DivisorLattice,
    orders: Vec<u64>,
    graph: Graph,
}

/// The vertices of order `d`: the generators of the subgroup of order `d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorClass {
    pub d: u64,
    pub members: Vec<u32>,
}

pub fn build_power_graph(n: u64) -> Result<PowerGraph> {
    PowerGraph::build(n, DEFAULT_MAX_VERTICES)
}

impl PowerGraph {
    pub fn build(n: u64, max_vertices: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::Zero);
        }
        if n > max_vertices {
            return Err(Error::TooLarge {
                requested: n,
                cap: max_vertices,
            });
        }
        let factorization = factorize(n)?;
        let lattice = DivisorLattice::new(&factorization);
        let size = n as usize;
        let orders: Vec<u64> = (0..n).map(|v| n / gcd(n, v)).collect();

        // One bitset per divisor class, then one shared row per class.
        let words = words_for(size);
        let tau = lattice.len();
        let mut class_bits = vec![vec![0u64; words]; tau];
        for (v, &o) in orders.iter().enumerate() {
            let idx = lattice.index_of(o).expect("order divides n");
            class_bits[idx][v / 64] |= 1u64 << (v % 64);
        }
        let mut class_rows = vec![vec![0u64; words]; tau];
        for (a, row) in class_rows.iter_mut().enumerate() {
            for (b, class) in class_bits.iter().enumerate() {
                if lattice.divides(a, b) || lattice.divides(b, a) {
                    for (dst, src) in row.iter_mut().zip(class) {
                        *dst |= src;
                    }
                }
            }
        }
        let mut bits = vec![0u64; words * size];
        for (v, &o) in orders.iter().enumerate() {
            let idx = lattice.index_of(o).expect("order divides n");
            bits[v * words..(v + 1) * words].copy_from_slice(&class_rows[idx]);
        }
        let graph = Graph::from_rows(size, bits)?;
        Ok(PowerGraph {
            n,
            factorization,
            lattice,
            orders,
            graph,
        })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn factorization(&self) -> &Factorization {
        &self.factorization
    }

    pub fn lattice(&self) -> &DivisorLattice {
        &self.lattice
    }

    /// Additive order of each vertex; `orders()[0] == 1`.
    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn order(&self, v: usize) -> u64 {
        self.orders[v]
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    /// Smallest vertex of order `d`, i.e. `n / d`.
    pub fn representative(&self, d: u64) -> Result<usize> {
        if d == 0 || !self.n.is_multiple_of(d) {
            return Err(Error::NotADivisor { n: self.n, d });
        }
        Ok(if d == 1 { 0 } else { (self.n / d) as usize })
    }

    pub fn generator_classes(&self) -> BTreeMap<u64, GeneratorClass> {
        let mut classes: BTreeMap<u64, GeneratorClass> = self
            .lattice
            .divisors()
            .iter()
            .map(|&d| {
                (
                    d,
                    GeneratorClass {
                        d,
                        members: Vec::new(),
                    },
                )
            })
            .collect();
        for (v, o) in self.orders.iter().enumerate() {
            classes
                .get_mut(o)
                .expect("order divides n")
                .members
                .push(v as u32);
        }
        classes
    }

    pub fn export(&self, format: Format) -> Vec<u8> {
        write_graph(
            &self.graph,
            format,
            Some(&self.orders),
            &format!("P(Z_{})", self.n),
        )
    }
}

pub fn generator_classes(g: &PowerGraph) -> BTreeMap<u64, GeneratorClass> {
    g.generator_classes()
}

/// `deg(x_d) = (d - 1) + sum of phi(e)` over `e | n` with `d | e`, `e != d`.
pub fn degree_closed_form(n: u64, d: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::Zero);
    }
    if d == 0 || !n.is_multiple_of(d) {
        return Err(Error::NotADivisor { n, d });
    }
    let lat = DivisorLattice::new(&factorize(n)?);
    Ok(lat.degree(lat.index_of(d).expect("divisor present")))
}

/// Serializes by format name: `edgelist`, `dot`, `dimacs` or `json`.
pub fn export_graph(g: &PowerGraph, format: &str) -> Result<Vec<u8>> {
    Ok(g.export(format.parse()?))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Literal definition: `y` is a positive multiple of `x` (or vice versa).
    fn multiples_oracle(n: u64) -> Vec<Vec<bool>> {
        (0..n)
            .map(|x| {
                let mut hit = vec![false; n as usize];
                for k in 1..=n {
                    hit[((k * x) % n) as usize] = true;
                }
                hit
            })
            .collect()
    }

    #[test]
    fn divisibility_rule_matches_multiples() {
        for n in 1..=200u64 {
            let g = build_power_graph(n).unwrap();
            let mult = multiples_oracle(n);
            for x in 0..n as usize {
                for y in 0..n as usize {
                    let expect = x != y && (mult[x][y] || mult[y][x]);
                    assert_eq!(g.graph().has_edge(x, y), expect, "n={n} x={x} y={y}");
                }
            }
        }
    }

    #[test]
    fn small_examples() {
        let g4 = build_power_graph(4).unwrap();
        assert_eq!(g4.graph(), &Graph::complete(4));

        let g6 = build_power_graph(6).unwrap();
        let g = g6.graph();
        assert_eq!(g.edge_count(), 13);
        for v in 1..6 {
            assert!(g.has_edge(0, v));
            assert!(g.has_edge(1, v) || v == 1);
            assert!(g.has_edge(5, v) || v == 5);
        }
        assert!(g.has_edge(2, 4));
        assert!(!g.has_edge(2, 3));
        assert!(!g.has_edge(3, 4));

        let g1 = build_power_graph(1).unwrap();
        assert_eq!(g1.graph().vertex_count(), 1);
        assert_eq!(g1.graph().edge_count(), 0);
    }

    #[test]
    fn build_errors() {
        assert_eq!(build_power_graph(0).unwrap_err(), Error::Zero);
        assert_eq!(
            PowerGraph::build(11, 10).unwrap_err(),
            Error::TooLarge {
                requested: 11,
                cap: 10
            }
        );
    }

    #[test]
    fn class_examples() {
        let c6 = build_power_graph(6).unwrap().generator_classes();
        let got: Vec<(u64, Vec<u32>)> = c6.into_values().map(|c| (c.d, c.members)).collect();
        assert_eq!(
            got,
            vec![(1, vec![0]), (2, vec![3]), (3, vec![2, 4]), (6, vec![1, 5])]
        );
        let c4 = build_power_graph(4).unwrap().generator_classes();
        assert_eq!(c4[&2].members, vec![2]);
        assert_eq!(c4[&4].members, vec![1, 3]);
        let c12 = build_power_graph(12).unwrap().generator_classes();
        assert_eq!(c12[&4].members, vec![3, 9]);
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(degree_closed_form(6, 3).unwrap(), 4);
        assert_eq!(degree_closed_form(12, 4).unwrap(), 7);
        for d in [1, 3, 9, 27, 81] {
            assert_eq!(degree_closed_form(81, d).unwrap(), 80);
        }
        assert_eq!(
            degree_closed_form(12, 5).unwrap_err(),
            Error::NotADivisor { n: 12, d: 5 }
        );
        let g6 = build_power_graph(6).unwrap();
        assert_eq!(g6.graph().degree(2), 4);
        let g12 = build_power_graph(12).unwrap();
        assert_eq!(g12.graph().degree(3), 7);
    }

    #[test]
    fn class_properties() {
        for n in 1..=120u64 {
            let pg = build_power_graph(n).unwrap();
            let g = pg.graph();
            let classes = pg.generator_classes();
            let mut seen = 0;
            for c in classes.values() {
                let idx = pg.lattice().index_of(c.d).unwrap();
                assert_eq!(c.members.len() as u64, pg.lattice().phi(idx));
                seen += c.members.len();
                for &a in &c.members {
                    for &b in &c.members {
                        if a != b {
                            assert!(g.has_edge(a as usize, b as usize));
                        }
                        assert_eq!(g.closed_row(a as usize), g.closed_row(b as usize));
                    }
                }
            }
            assert_eq!(seen as u64, n);
            assert_eq!(classes[&1].members, vec![0]);
            let twice: u64 = classes
                .values()
                .map(|c| c.members.len() as u64 * degree_closed_form(n, c.d).unwrap())
                .sum();
            assert_eq!(twice, 2 * g.edge_count() as u64);
        }
    }

    #[test]
    fn exports() {
        let g2 = build_power_graph(2).unwrap();
        assert_eq!(export_graph(&g2, "edgelist").unwrap(), b"0 1\n");
        let g6 = build_power_graph(6).unwrap();
        let dimacs = String::from_utf8(export_graph(&g6, "dimacs").unwrap()).unwrap();
        assert_eq!(dimacs.lines().next(), Some("p edge 6 13"));
        let g1 = build_power_graph(1).unwrap();
        assert!(export_graph(&g1, "edgelist").unwrap().is_empty());
        assert!(matches!(
            export_graph(&g1, "xml"),
            Err(Error::UnknownFormat(_))
        ));
        let json = String::from_utf8(export_graph(&g2, "json").unwrap()).unwrap();
        assert_eq!(json, "{\"n\":2,\"orders\":[1,2],\"edges\":[[0,1]]}\n");
    }

    #[test]
    fn universal_vertices_and_prime_powers() {
        for n in [8u64, 9, 25, 27, 32, 49] {
            let g = build_power_graph(n).unwrap();
            assert_eq!(g.graph().edge_count() as u64, n * (n - 1) / 2);
        }
        let g = build_power_graph(60).unwrap();
        for v in 0..60 {
            if g.order(v) == 60 || v == 0 {
                assert_eq!(g.graph().degree(v), 59);
            }
        }
    }
}
