//! Every automorphism fixes each class `X_d`, `1 < d < n`, setwise (and so
//! also `X_1 ∪ X_n`), which is what makes the closed-form order exact.

use serde_json::json;

use super::report::{CheckReport, Status};
use crate::aut::{closed_twin_classes, search_automorphisms, Permutation, SearchOptions};
use crate::error::Result;
use crate::powergraph::{build_power_graph, PowerGraph};

pub const CHECK_NAME: &str = "class-preservation";

/// The expected twin partition: `X_d` for each `1 < d < n`, plus
/// `X_1 ∪ X_n`, each sorted, the whole ordered by smallest member.
pub fn expected_classes(g: &PowerGraph) -> Vec<Vec<u32>> {
    let n = g.n();
    let classes = g.generator_classes();
    let mut cells: Vec<Vec<u32>> = Vec::new();
    let mut top: Vec<u32> = Vec::new();
    for (d, class) in classes {
        if d == 1 || d == n {
            top.extend(class.members);
        } else {
            cells.push(class.members);
        }
    }
    top.sort_unstable();
    cells.push(top);
    cells.sort_unstable_by_key(|c| c[0]);
    cells
}

/// Classes (as sets of vertices) that `p` fails to map onto themselves.
pub fn moved_classes(p: &Permutation, classes: &[Vec<u32>]) -> Vec<usize> {
    let mut member = vec![usize::MAX; p.degree()];
    for (i, c) in classes.iter().enumerate() {
        for &v in c {
            member[v as usize] = i;
        }
    }
    (0..classes.len())
        .filter(|&i| classes[i].iter().any(|&v| member[p.apply(v) as usize] != i))
        .collect()
}

pub fn check_class_preservation(n: u64) -> Result<CheckReport> {
    check_class_preservation_with(n, SearchOptions::default())
}

pub fn check_class_preservation_with(n: u64, opts: SearchOptions) -> Result<CheckReport> {
    let g = build_power_graph(n)?;
    if g.factorization().is_prime_power() {
        return Ok(CheckReport {
            n,
            check: CHECK_NAME,
            status: Status::HypothesisNotMet,
            details: json!({ "reason": "n is a prime power, so the graph is complete" }),
        });
    }
    let expected = expected_classes(&g);
    let twins_match = closed_twin_classes(g.graph()).cells() == expected.as_slice();
    let result = search_automorphisms(g.graph(), opts)?;
    let mut violations = Vec::new();
    for p in result.group.generators() {
        for i in moved_classes(p, &expected) {
            let v = expected[i][0] as usize;
            violations.push(json!({
                "generator": p.to_string(),
                "class_order": g.order(v),
                "merged_with_identity": i == expected.len() - 1 || v == 0,
            }));
        }
    }
    let status = if violations.is_empty() && twins_match {
        Status::Pass
    } else {
        Status::Fail
    };
    Ok(CheckReport {
        n,
        check: CHECK_NAME,
        status,
        details: json!({
            "generators": result.group.generators().len(),
            "classes": expected.len(),
            "twin_classes_match": twins_match,
            "violations": violations,
        }),
    })
}
