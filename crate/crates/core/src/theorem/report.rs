use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    Vacuous,
    HypothesisNotMet,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Vacuous => "vacuous",
            Status::HypothesisNotMet => "hypothesis-not-met",
        }
    }

    /// Everything but `Fail` is a non-disagreement.
    pub fn is_ok(self) -> bool {
        self != Status::Fail
    }
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckReport {
    pub n: u64,
    pub check: &'static str,
    pub status: Status,
    pub details: serde_json::Value,
}

impl CheckReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

/// One asserted relation between two computed quantities.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Comparison {
    pub case: &'static str,
    /// Free-form parameters identifying the configuration, e.g. `t=24`.
    pub config: String,
    pub lhs: u64,
    pub relation: Relation,
    pub rhs: u64,
    pub holds: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = "=")]
    Eq,
    #[serde(rename = "!=")]
    Ne,
    #[serde(rename = ">")]
    Gt,
    #[serde(rename = ">=")]
    Ge,
}

impl Comparison {
    pub fn new(case: &'static str, config: String, lhs: u64, relation: Relation, rhs: u64) -> Self {
        let holds = match relation {
            Relation::Eq => lhs == rhs,
            Relation::Ne => lhs != rhs,
            Relation::Gt => lhs > rhs,
            Relation::Ge => lhs >= rhs,
        };
        Comparison {
            case,
            config,
            lhs,
            relation,
            rhs,
            holds,
        }
    }
}

/// `Vacuous` for no comparisons, `Fail` if any fails, else `Pass`.
pub fn status_of(comparisons: &[Comparison]) -> Status {
    if comparisons.is_empty() {
        Status::Vacuous
    } else if comparisons.iter().all(|c| c.holds) {
        Status::Pass
    } else {
        Status::Fail
    }
}
