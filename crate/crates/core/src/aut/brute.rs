use super::group::PermutationGroup;
use super::perm::Permutation;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest graph the exhaustive oracle accepts (10! candidates).
pub const BRUTE_FORCE_MAX_VERTICES: usize = 10;

/// Every permutation preserving adjacency, by enumerating all `N!`.
pub fn brute_force_automorphisms(g: &Graph) -> Result<Vec<Permutation>> {
    let n = g.vertex_count();
    if n > BRUTE_FORCE_MAX_VERTICES {
        return Err(Error::OracleTooLarge {
            requested: n,
            cap: BRUTE_FORCE_MAX_VERTICES,
        });
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let preserves = |p: &[u32]| {
        edges
            .iter()
            .all(|&(u, v)| g.has_edge(p[u] as usize, p[v] as usize))
    };

    // Heap's algorithm, iterative.
    let mut perm: Vec<u32> = (0..n as u32).collect();
    let mut c = vec![0usize; n];
    let mut out = Vec::new();
    if preserves(&perm) {
        out.push(Permutation::from_images_unchecked(perm.clone()));
    }
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            if preserves(&perm) {
                out.push(Permutation::from_images_unchecked(perm.clone()));
            }
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    Ok(out)
}

/// Full automorphism group by exhaustion; the generators are all survivors.
pub fn brute_force_aut(g: &Graph) -> Result<PermutationGroup> {
    let survivors = brute_force_automorphisms(g)?;
    let group = PermutationGroup::from_generators(g.vertex_count(), survivors);
    debug_assert_eq!(
        group.order(),
        num_bigint::BigUint::from(group.generators().len())
    );
    Ok(group)
}
