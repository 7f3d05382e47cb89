use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::One;

use super::partition::OrderedPartition;
use crate::graph::Graph;

/// Classes of vertices with equal closed neighborhoods, ordered by their
/// smallest member.
pub fn closed_twin_classes(g: &Graph) -> OrderedPartition {
    let n = g.vertex_count();
    let mut by_row: HashMap<Vec<u64>, usize> = HashMap::new();
    let mut cells: Vec<Vec<u32>> = Vec::new();
    for v in 0..n {
        let idx = *by_row.entry(g.closed_row(v)).or_insert_with(|| {
            cells.push(Vec::new());
            cells.len() - 1
        });
        cells[idx].push(v as u32);
    }
    OrderedPartition::new(n, cells).expect("twin classes partition the vertices")
}

pub fn factorial(k: u64) -> BigUint {
    (2..=k).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}

/// Product of `|class|!` over the closed-twin classes. Closed twins can be
/// swapped freely, so this divides the automorphism group order.
pub fn twin_lower_bound_order(g: &Graph) -> BigUint {
    closed_twin_classes(g)
        .cells()
        .iter()
        .map(|c| factorial(c.len() as u64))
        .product()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::powergraph::build_power_graph;

    #[test]
    fn twin_examples() {
        let g6 = build_power_graph(6).unwrap();
        assert_eq!(
            closed_twin_classes(g6.graph()).cells(),
            &[vec![0, 1, 5], vec![2, 4], vec![3]]
        );
        assert_eq!(twin_lower_bound_order(g6.graph()), BigUint::from(12u32));

        let k = Graph::complete(4);
        assert_eq!(closed_twin_classes(&k).len(), 1);
        assert_eq!(twin_lower_bound_order(&k), BigUint::from(24u32));

        let p = Graph::path(3);
        assert_eq!(closed_twin_classes(&p).len(), 3);
        assert_eq!(twin_lower_bound_order(&p), BigUint::one());

        let g12 = build_power_graph(12).unwrap();
        assert_eq!(
            closed_twin_classes(g12.graph()).cells(),
            &[
                vec![0, 1, 5, 7, 11],
                vec![2, 10],
                vec![3, 9],
                vec![4, 8],
                vec![6]
            ]
        );
    }

    #[test]
    fn factorials() {
        assert_eq!(factorial(0), BigUint::one());
        assert_eq!(factorial(5), BigUint::from(120u32));
        assert_eq!(
            factorial(33).to_string(),
            "8683317618811886495518194401280000000"
        );
    }
}
