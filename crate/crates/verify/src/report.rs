use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Duration;

use bornlab::{generate_ideal, FiniteSpace, HyperTopology, Ideal, InstanceDoc, InstanceError, SetFamily};
use serde::{Deserialize, Serialize};

/// Everything needed to rebuild a failing instance.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub check: String,
    pub space_name: String,
    pub variant: String,
    pub instance: InstanceDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub other_generators: Option<Vec<Vec<String>>>,
    pub seed: u64,
    pub trials: usize,
    pub detail: String,
}

impl Witness {
    #[allow(clippy::too_many_arguments)]
    pub(crate) fn new(
        check: &str,
        space_name: &str,
        space: &FiniteSpace,
        ideal: &Ideal,
        other: Option<&Ideal>,
        topology: Option<&HyperTopology>,
        family: Option<SetFamily>,
        variant: &str,
        seed: u64,
        trials: usize,
        detail: String,
    ) -> Self {
        let mut instance = InstanceDoc::from_space(space, Some(space_name)).with_ideal(space, ideal);
        if let Some(t) = topology {
            instance = instance.with_topology(space, t);
        }
        if let Some(f) = family {
            instance = instance.with_family(space, f);
        }
        Witness {
            check: check.to_string(),
            space_name: space_name.to_string(),
            variant: variant.to_string(),
            instance,
            other_generators: other.map(|o| o.maximal_members().into_iter().map(|s| space.subset_labels(s)).collect()),
            seed,
            trials,
            detail,
        }
    }

    pub fn space(&self) -> Result<FiniteSpace, InstanceError> {
        self.instance.space()
    }

    pub fn other_ideal(&self, space: &FiniteSpace) -> Result<Option<Ideal>, InstanceError> {
        let Some(gens) = &self.other_generators else { return Ok(None) };
        let members = gens.iter().map(|g| space.subset(g)).collect::<Result<SetFamily, _>>()?;
        Ok(Some(generate_ideal(space, members)))
    }
}

/// How often each side of an equivalence was observed.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Branches {
    pub holds: usize,
    pub fails: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckResult {
    pub id: String,
    pub anchor: String,
    pub scope: String,
    pub passed: bool,
    pub instances: usize,
    pub exhaustive_instances: usize,
    pub sampled_instances: usize,
    pub comparisons: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub branches: Option<Branches>,
    pub outside_hypothesis: usize,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub notes: BTreeMap<String, usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub outside_hypothesis_witness: Option<Witness>,
    #[serde(skip)]
    pub wall_time: Duration,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SearchOutcome {
    pub target: String,
    pub pool: String,
    pub spaces: usize,
    pub found: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PoolSummary {
    pub spaces: usize,
    pub exhaustive_spaces: usize,
    pub sampled_spaces: usize,
    pub ideals: usize,
    pub lower_topologies: usize,
    pub upper_topologies: usize,
    pub miss_topologies: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub seed: u64,
    pub trials: usize,
    pub pool: PoolSummary,
    pub passed: bool,
    pub checks: Vec<CheckResult>,
    pub searches: Vec<SearchOutcome>,
    #[serde(skip)]
    pub wall_time: Duration,
}

impl Report {
    pub fn check(&self, id: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn search(&self, target: &str, pool: &str) -> Option<&SearchOutcome> {
        self.searches.iter().find(|s| s.target == target && s.pool == pool)
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("reports serialize");
        text.push('\n');
        text
    }

    /// One line per check and per search.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{:<6} {:<6} {:>9} {:>12} {:>9}  anchor",
            "check", "status", "instances", "comparisons", "branches"
        );
        for c in &self.checks {
            let branches = c.branches.map_or("-".to_string(), |b| format!("{}/{}", b.holds, b.fails));
            let _ = writeln!(
                out,
                "{:<6} {:<6} {:>9} {:>12} {:>9}  {}",
                c.id,
                if c.passed { "pass" } else { "FAIL" },
                c.instances,
                c.comparisons,
                branches,
                c.anchor
            );
            if c.outside_hypothesis > 0 {
                let _ = writeln!(
                    out,
                    "{:<13} {} counterexample(s) on instances outside the hypothesis",
                    "", c.outside_hypothesis
                );
            }
            if let Some(w) = &c.witness {
                let _ = writeln!(out, "{:<13} witness on {} ({}): {}", "", w.space_name, w.variant, w.detail);
            }
        }
        for s in &self.searches {
            let outcome = match &s.witness {
                Some(w) => format!("found on {}: {}", w.space_name, w.detail),
                None => "none".to_string(),
            };
            let _ = writeln!(out, "search {} over {} ({} spaces): {}", s.target, s.pool, s.spaces, outcome);
        }
        let failed = self.checks.iter().filter(|c| !c.passed).count();
        let _ = writeln!(out, "{} checks, {} failed", self.checks.len(), failed);
        out
    }
}
