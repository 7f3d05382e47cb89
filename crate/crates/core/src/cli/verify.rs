//! Cross-checks automorphism orders from several methods over a range of `n`.

use std::collections::BTreeMap;
use std::time::Instant;

use clap::ValueEnum;
use rayon::prelude::*;
use serde::Serialize;

use crate::aut::{
    brute_force_aut, search_automorphisms, twin_lower_bound_order, SearchOptions,
    BRUTE_FORCE_MAX_VERTICES,
};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::powergraph::build_power_graph;
use crate::theorem::{aut_order_formula, Branch};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Formula,
    Twin,
    Ir,
    Brute,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Formula => "formula",
            Method::Twin => "twin",
            Method::Ir => "ir",
            Method::Brute => "brute",
        }
    }

    fn needs_graph(self) -> bool {
        self != Method::Formula
    }
}

/// What one method produced for one `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Order(String),
    /// The method's own cap excludes this `n`.
    Skipped,
    /// A budget or size limit stopped the computation.
    ResourceCap(String),
}

impl Outcome {
    pub fn label(&self) -> &str {
        match self {
            Outcome::Order(s) => s,
            Outcome::Skipped => "skipped",
            Outcome::ResourceCap(_) => "resource-cap",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Entry {
    pub n: u64,
    pub branch: Branch,
    /// Decimal order, `"skipped"` or `"resource-cap"`.
    pub method_orders: BTreeMap<&'static str, String>,
    /// True iff every method that produced an order produced the same one.
    pub agree: bool,
    pub elapsed_ms: BTreeMap<&'static str, f64>,
    #[serde(skip)]
    pub capped: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    /// Entries where some method hit a resource limit.
    pub resource_capped: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub entries: Vec<Entry>,
    pub summary: Summary,
}

impl VerificationReport {
    /// 1 on any disagreement, else 3 if a limit was hit, else 0.
    pub fn exit_code(&self) -> i32 {
        if self.summary.failed > 0 {
            1
        } else if self.summary.resource_capped > 0 {
            3
        } else {
            0
        }
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,branch,method,order,elapsed_ms,agree\n");
        for e in &self.entries {
            for (m, order) in &e.method_orders {
                let ms = e.elapsed_ms.get(m).copied().unwrap_or(0.0);
                out.push_str(&format!(
                    "{},{},{},{},{:.3},{}\n",
                    e.n, e.branch, m, order, ms, e.agree
                ));
            }
        }
        out
    }
}

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub from: u64,
    pub to: u64,
    pub methods: Vec<Method>,
    pub jobs: usize,
    pub options: SearchOptions,
}

fn run_method(
    method: Method,
    n: u64,
    graph: Option<&Graph>,
    opts: SearchOptions,
) -> Result<Outcome> {
    let g = || graph.expect("graph built for graph methods");
    let order = match method {
        Method::Formula => aut_order_formula(n)?.order,
        Method::Twin => twin_lower_bound_order(g()),
        Method::Ir => search_automorphisms(g(), opts)?.group.order(),
        Method::Brute => {
            if n as usize > BRUTE_FORCE_MAX_VERTICES {
                return Ok(Outcome::Skipped);
            }
            brute_force_aut(g())?.order()
        }
    };
    Ok(Outcome::Order(order.to_string()))
}

fn verify_one(
    n: u64,
    cfg: &VerifyConfig,
    source: &(dyn Fn(u64) -> Result<Graph> + Sync),
) -> Result<Entry> {
    let branch = aut_order_formula(n)?.branch;
    let graph = if cfg.methods.iter().any(|m| m.needs_graph()) {
        match source(n) {
            Ok(g) => Some(Ok(g)),
            Err(e) if e.is_resource_cap() => Some(Err(e)),
            Err(e) => return Err(e),
        }
    } else {
        None
    };
    let mut method_orders = BTreeMap::new();
    let mut elapsed_ms = BTreeMap::new();
    let mut orders: Vec<String> = Vec::new();
    let mut capped = false;
    for &m in &cfg.methods {
        let start = Instant::now();
        let outcome = match (&graph, m.needs_graph()) {
            (Some(Err(e)), true) => Outcome::ResourceCap(e.to_string()),
            (g, _) => {
                let g = g.as_ref().and_then(|r| r.as_ref().ok());
                match run_method(m, n, g, cfg.options) {
                    Ok(o) => o,
                    Err(e) if e.is_resource_cap() => Outcome::ResourceCap(e.to_string()),
                    Err(e) => return Err(e),
                }
            }
        };
        let ms = start.elapsed().as_secs_f64() * 1000.0;
        match &outcome {
            Outcome::Order(s) => orders.push(s.clone()),
            Outcome::ResourceCap(_) => capped = true,
            Outcome::Skipped => {}
        }
        method_orders.insert(m.name(), outcome.label().to_string());
        elapsed_ms.insert(m.name(), (ms * 1000.0).round() / 1000.0);
    }
    let agree = orders.windows(2).all(|w| w[0] == w[1]);
    Ok(Entry {
        n,
        branch,
        method_orders,
        agree,
        elapsed_ms,
        capped,
    })
}

/// Default graph source: the power graph of Z_n.
pub fn power_graph_source(n: u64) -> Result<Graph> {
    Ok(build_power_graph(n)?.into_graph())
}

/// Runs the configured methods for every `n` in range. Graphs come from
/// `source`, so a caller can substitute a deliberately altered graph.
pub fn run_verify(
    cfg: &VerifyConfig,
    source: &(dyn Fn(u64) -> Result<Graph> + Sync),
) -> Result<VerificationReport> {
    if cfg.from < 2 || cfg.from > cfg.to {
        return Err(Error::InvalidInstance(format!(
            "range must satisfy 2 <= from <= to, got {}..{}",
            cfg.from, cfg.to
        )));
    }
    let mut methods = cfg.methods.clone();
    methods.sort_unstable();
    methods.dedup();
    let cfg = VerifyConfig {
        methods,
        ..cfg.clone()
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs.max(1))
        .build()
        .expect("thread pool");
    let mut entries: Vec<Entry> = pool.install(|| {
        (cfg.from..=cfg.to)
            .into_par_iter()
            .map(|n| verify_one(n, &cfg, source))
            .collect::<Result<Vec<_>>>()
    })?;
    entries.sort_unstable_by_key(|e| e.n);
    let failed = entries.iter().filter(|e| !e.agree).count();
    let summary = Summary {
        total: entries.len(),
        passed: entries.len() - failed,
        failed,
        resource_capped: entries.iter().filter(|e| e.capped).count(),
    };
    Ok(VerificationReport { entries, summary })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(from: u64, to: u64, methods: &[Method]) -> VerifyConfig {
        VerifyConfig {
            from,
            to,
            methods: methods.to_vec(),
            jobs: 1,
            options: SearchOptions::default(),
        }
    }

    #[test]
    fn small_range_agrees() {
        let r = run_verify(
            &cfg(2, 10, &[Method::Formula, Method::Brute]),
            &power_graph_source,
        )
        .unwrap();
        assert_eq!(
            r.summary,
            Summary {
                total: 9,
                passed: 9,
                failed: 0,
                resource_capped: 0
            }
        );
        assert_eq!(r.exit_code(), 0);
        let r = run_verify(
            &cfg(2, 2, &[Method::Formula, Method::Ir]),
            &power_graph_source,
        )
        .unwrap();
        assert_eq!(r.entries[0].method_orders["formula"], "2");
        assert_eq!(r.entries[0].method_orders["ir"], "2");
    }

    #[test]
    fn brute_is_skipped_past_its_cap() {
        let r = run_verify(
            &cfg(10, 11, &[Method::Brute, Method::Formula]),
            &power_graph_source,
        )
        .unwrap();
        assert_eq!(r.entries[1].method_orders["brute"], "skipped");
        assert!(r.entries[1].agree);
        assert_eq!(r.exit_code(), 0);
    }

    #[test]
    fn corrupted_graph_disagrees() {
        let source = |n: u64| -> Result<Graph> {
            let g = power_graph_source(n)?;
            if n == 12 {
                g.with_toggled_edge(2, 3)
            } else {
                Ok(g)
            }
        };
        let r = run_verify(&cfg(10, 14, &[Method::Formula, Method::Ir]), &source).unwrap();
        assert_eq!(r.summary.failed, 1);
        assert!(!r.entries[2].agree);
        assert_eq!(r.exit_code(), 1);
    }

    #[test]
    fn budget_is_a_resource_cap() {
        let mut c = cfg(30, 30, &[Method::Formula, Method::Ir]);
        c.options.node_budget = 2;
        let r = run_verify(&c, &power_graph_source).unwrap();
        assert_eq!(r.entries[0].method_orders["ir"], "resource-cap");
        assert_eq!(r.exit_code(), 3);
    }

    #[test]
    fn parallel_matches_sequential() {
        let methods = [Method::Formula, Method::Twin, Method::Ir];
        let a = run_verify(&cfg(2, 40, &methods), &power_graph_source).unwrap();
        let mut c = cfg(2, 40, &methods);
        c.jobs = 4;
        let b = run_verify(&c, &power_graph_source).unwrap();
        let orders = |r: &VerificationReport| {
            r.entries
                .iter()
                .map(|e| e.method_orders.clone())
                .collect::<Vec<_>>()
        };
        assert_eq!(orders(&a), orders(&b));
    }

    #[test]
    fn csv_projection() {
        let r = run_verify(
            &cfg(6, 6, &[Method::Formula, Method::Twin]),
            &power_graph_source,
        )
        .unwrap();
        let csv = r.to_csv();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "n,branch,method,order,elapsed_ms,agree");
        assert!(lines[1].starts_with("6,general,formula,12,"));
        assert!(lines[2].starts_with("6,general,twin,12,"));
        assert!(lines[2].ends_with(",true"));
    }

    #[test]
    fn bad_range() {
        assert!(run_verify(&cfg(1, 5, &[Method::Formula]), &power_graph_source).is_err());
        assert!(run_verify(&cfg(6, 5, &[Method::Formula]), &power_graph_source).is_err());
    }
}
