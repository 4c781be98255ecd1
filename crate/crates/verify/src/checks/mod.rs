//! The individual checks. Each one expands a pool space into units and
//! evaluates a unit to a [`Verdict`]; replaying a witness rebuilds its unit
//! and evaluates it again.

use std::collections::BTreeMap;
use std::time::Instant;

use bornlab::{sample_families, ClosureOperator, FiniteSpace, HyperTopology, Ideal, SetFamily};

use crate::pool::{splitmix, InstancePool, PoolSpace};
use crate::report::{Branches, CheckResult, Witness};

macro_rules! tri {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(verdict) => return verdict,
        }
    };
}

mod engine;
mod lower;
mod two_sided;
mod upper;

/// One instance of a check.
#[derive(Clone, Debug)]
pub struct Unit {
    pub space_name: String,
    pub space: FiniteSpace,
    pub ideal: Ideal,
    pub other: Option<Ideal>,
    pub topology: Option<HyperTopology>,
    pub variant: String,
    pub seed: u64,
    pub trials: usize,
}

impl Unit {
    pub fn exhaustive(&self) -> bool {
        self.space.len() <= 3
    }

    /// All families on small spaces; otherwise a seeded sample that always
    /// includes the empty and the full family.
    pub fn families(&self) -> Vec<SetFamily> {
        let hs = self.space.hyperspace();
        if self.exhaustive() {
            return hs.families();
        }
        let mut sample = vec![SetFamily::EMPTY, hs.full()];
        sample.extend(sample_families(hs, self.trials, self.seed));
        sample
    }

    fn topology(&self) -> &HyperTopology {
        self.topology.as_ref().expect("unit has a topology")
    }

    fn other(&self) -> Ideal {
        self.other.expect("unit has a second ideal")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass { branch: Option<bool>, comparisons: u64, notes: Vec<&'static str> },
    Fail { detail: String, family: Option<SetFamily>, comparisons: u64 },
}

impl Verdict {
    pub fn is_fail(&self) -> bool {
        matches!(self, Verdict::Fail { .. })
    }
}

pub(crate) fn pass(comparisons: u64) -> Verdict {
    Verdict::Pass { branch: None, comparisons, notes: Vec::new() }
}

pub(crate) fn fail(detail: impl Into<String>, family: Option<SetFamily>, comparisons: u64) -> Verdict {
    Verdict::Fail { detail: detail.into(), family, comparisons }
}

/// Both sides of an equivalence must agree.
pub(crate) fn iff(lhs: bool, rhs: bool, comparisons: u64, what: &str) -> Verdict {
    if lhs == rhs {
        Verdict::Pass { branch: Some(lhs), comparisons, notes: Vec::new() }
    } else {
        fail(format!("{what}: left side {lhs}, right side {rhs}"), None, comparisons)
    }
}

/// Turns an operation error into a failing verdict.
pub(crate) fn lift<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, Verdict> {
    r.map_err(|e| fail(e.to_string(), None, 0))
}

pub(crate) fn table(op: &ClosureOperator, families: &[SetFamily]) -> Vec<SetFamily> {
    families.iter().map(|&f| op.apply(f)).collect()
}

/// First family where `finer` gives a larger closure than `coarser`.
pub(crate) fn not_finer(
    finer: &ClosureOperator,
    coarser: &ClosureOperator,
    families: &[SetFamily],
) -> Option<SetFamily> {
    families.iter().copied().find(|&f| !finer.apply(f).is_subfamily_of(coarser.apply(f)))
}

/// Compares two open-set lists given in (member count, bits) order.
pub(crate) fn compare_opens(
    space: &FiniteSpace,
    opens: &[SetFamily],
    characterized: &[SetFamily],
    what: &str,
) -> Verdict {
    let comparisons = (opens.len() + characterized.len()) as u64;
    let extra = opens.iter().find(|g| !characterized.contains(g));
    let missing = characterized.iter().find(|g| !opens.contains(g));
    let first = match (extra, missing) {
        (Some(a), Some(b)) => Some(if (a.len(), a.bits()) <= (b.len(), b.bits()) { (*a, true) } else { (*b, false) }),
        (Some(a), None) => Some((*a, true)),
        (None, Some(b)) => Some((*b, false)),
        (None, None) => None,
    };
    match first {
        None => pass(comparisons),
        Some((g, true)) => fail(
            format!("{} is open in the reflection but is not {what}", space.format_family(g)),
            Some(g),
            comparisons,
        ),
        Some((g, false)) => fail(
            format!("{} is {what} but is not open in the reflection", space.format_family(g)),
            Some(g),
            comparisons,
        ),
    }
}

pub(crate) fn sorted(mut families: Vec<SetFamily>) -> Vec<SetFamily> {
    families.sort_by_key(|f| (f.len(), f.bits()));
    families.dedup();
    families
}

/// Which slice of a pool space a check ranges over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Over {
    Ideals,
    IdealPairs,
    Lower,
    LowerPairs,
    Upper,
    UpperPairs,
    Miss,
}

pub(crate) struct UnitBuilder<'a> {
    ps: &'a PoolSpace,
    trials: usize,
    counter: u64,
    units: Vec<Unit>,
}

impl<'a> UnitBuilder<'a> {
    pub(crate) fn new(ps: &'a PoolSpace, trials: usize) -> Self {
        UnitBuilder { ps, trials, counter: 0, units: Vec::new() }
    }

    pub(crate) fn push(&mut self, ideal: Ideal, other: Option<Ideal>, topology: Option<&HyperTopology>, variant: &str) {
        self.counter += 1;
        self.units.push(Unit {
            space_name: self.ps.name.clone(),
            space: self.ps.space.clone(),
            ideal,
            other,
            topology: topology.cloned(),
            variant: variant.to_string(),
            seed: splitmix(self.ps.seed.wrapping_add(self.counter)),
            trials: self.trials,
        });
    }

    pub(crate) fn over(mut self, over: Over, variant: &str) -> Self {
        let ps = self.ps;
        let topologies: Vec<&HyperTopology> = match over {
            Over::Lower | Over::LowerPairs => ps.lower.iter().collect(),
            Over::Upper | Over::UpperPairs => ps.upper.iter().collect(),
            Over::Miss => ps.miss().collect(),
            Over::Ideals | Over::IdealPairs => Vec::new(),
        };
        match over {
            Over::Ideals => ps.ideals.iter().for_each(|&s| self.push(s, None, None, variant)),
            Over::IdealPairs => {
                for &s in &ps.ideals {
                    for &t in &ps.ideals {
                        self.push(s, Some(t), None, variant);
                    }
                }
            }
            Over::Lower | Over::Upper | Over::Miss => {
                for t in &topologies {
                    for &s in &ps.ideals {
                        self.push(s, None, Some(t), variant);
                    }
                }
            }
            Over::LowerPairs | Over::UpperPairs => {
                for t in &topologies {
                    for &s in &ps.ideals {
                        for &u in &ps.ideals {
                            self.push(s, Some(u), Some(t), variant);
                        }
                    }
                }
            }
        }
        self
    }

    pub(crate) fn build(self) -> Vec<Unit> {
        self.units
    }
}

/// Standing assumption of a result, beyond what its statement spells out.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Hypothesis {
    Any,
    /// A true metric, not just a pseudometric.
    Metric,
    /// The topology is a miss topology.
    Miss,
}

impl Hypothesis {
    pub fn holds(self, unit: &Unit) -> bool {
        match self {
            Hypothesis::Any => true,
            Hypothesis::Metric => unit.space.is_metric(),
            Hypothesis::Miss => unit.topology.as_ref().is_none_or(HyperTopology::is_miss),
        }
    }
}

pub(crate) type UnitsFn = fn(&PoolSpace, usize) -> Vec<Unit>;
pub(crate) type EvalFn = fn(&Unit) -> Verdict;

pub struct CheckDef {
    pub id: &'static str,
    pub anchor: &'static str,
    /// Universally quantified over topologies, checked on sampled candidates.
    pub universality: bool,
    /// Failures on units outside this hypothesis are tallied separately.
    pub hypothesis: Hypothesis,
    pub(crate) units: UnitsFn,
    pub(crate) eval: EvalFn,
}

impl CheckDef {
    fn scope(&self, exhaustive: usize, sampled: usize) -> String {
        let base = match (exhaustive > 0, sampled > 0) {
            (true, true) => "exhaustive+sampled",
            (false, true) => "sampled",
            _ => "exhaustive",
        };
        if self.universality {
            format!("{base}, sampled-universality")
        } else {
            base.to_string()
        }
    }

    pub fn run(&self, pool: &InstancePool) -> Option<CheckResult> {
        let start = Instant::now();
        let mut instances = 0;
        let mut exhaustive = 0;
        let mut sampled = 0;
        let mut comparisons = 0;
        let mut branches = Branches::default();
        let mut has_branches = false;
        let mut notes: BTreeMap<String, usize> = BTreeMap::new();
        let mut witness = None;
        let mut outside = 0;
        let mut outside_witness = None;
        for ps in &pool.spaces {
            for unit in (self.units)(ps, pool.trials) {
                instances += 1;
                if unit.exhaustive() {
                    exhaustive += 1;
                } else {
                    sampled += 1;
                }
                match (self.eval)(&unit) {
                    Verdict::Pass { branch, comparisons: c, notes: n } => {
                        comparisons += c;
                        if let Some(b) = branch {
                            has_branches = true;
                            if b {
                                branches.holds += 1;
                            } else {
                                branches.fails += 1;
                            }
                        }
                        for note in n {
                            *notes.entry(note.to_string()).or_default() += 1;
                        }
                    }
                    Verdict::Fail { detail, family, comparisons: c } => {
                        comparisons += c;
                        let w = || self.witness(&unit, family, detail.clone());
                        if !self.hypothesis.holds(&unit) {
                            outside += 1;
                            if outside_witness.is_none() {
                                outside_witness = Some(w());
                            }
                        } else if witness.is_none() {
                            witness = Some(w());
                        }
                    }
                }
            }
        }
        if instances == 0 {
            return None;
        }
        Some(CheckResult {
            id: self.id.to_string(),
            anchor: self.anchor.to_string(),
            scope: self.scope(exhaustive, sampled),
            passed: witness.is_none(),
            instances,
            exhaustive_instances: exhaustive,
            sampled_instances: sampled,
            comparisons,
            branches: has_branches.then_some(branches),
            outside_hypothesis: outside,
            notes,
            witness,
            outside_hypothesis_witness: outside_witness,
            wall_time: start.elapsed(),
        })
    }

    fn witness(&self, unit: &Unit, family: Option<SetFamily>, detail: String) -> Witness {
        Witness::new(
            self.id,
            &unit.space_name,
            &unit.space,
            &unit.ideal,
            unit.other.as_ref(),
            unit.topology.as_ref(),
            family,
            &unit.variant,
            unit.seed,
            unit.trials,
            detail,
        )
    }

    /// The units this check expands `space` into.
    pub fn units_for(&self, space: &PoolSpace, trials: usize) -> Vec<Unit> {
        (self.units)(space, trials)
    }

    pub fn evaluate(&self, unit: &Unit) -> Verdict {
        (self.eval)(unit)
    }
}

/// Every check, ordered by identifier.
pub fn registry() -> Vec<CheckDef> {
    let mut all = Vec::new();
    all.extend(lower::checks());
    all.extend(upper::checks());
    all.extend(two_sided::checks());
    all.extend(engine::checks());
    all.sort_by_key(|c| c.id);
    all
}

pub fn check_ids() -> Vec<&'static str> {
    registry().iter().map(|c| c.id).collect()
}
