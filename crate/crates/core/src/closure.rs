//! Čech closure operators on the hyperspace.
//!
//! A [`ClosureOperator`] is a pure map on [`SetFamily`] values together with a
//! [`Provenance`] record. Operators are never tabulated; the validators below
//! evaluate them on demand.

use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::family::{Ideal, SetFamily};
use crate::space::{Enlargement, FiniteSpace, Hyperspace, Subset};
use crate::topology::HyperTopology;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ClosureError {
    #[error("topology `{0}` is not a lower hyperspace topology")]
    NotLowerTopology(String),
    #[error("topology `{0}` is not an upper hyperspace topology")]
    NotUpperTopology(String),
    #[error("operator {operator} is not idempotent at family {family:?}")]
    NotIdempotentInput { operator: String, family: SetFamily },
    #[error("exhaustive scans need at most 4 points, got {0}")]
    ScopeTooLarge(usize),
    #[error("operators act on different hyperspaces")]
    HyperspaceMismatch,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Lower,
    Upper,
    Both,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Lower => "lower",
            Side::Upper => "upper",
            Side::Both => "both",
        })
    }
}

/// Which construction produced an operator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum Provenance {
    ClMetric { side: Side },
    ClBorn { side: Side, ideal: String },
    ClTau { ideal: String },
    ClLowerMod { topology: String, ideal: String },
    ClUpperMod { topology: String, ideal: String },
    Topology { name: String },
    Identity,
    Custom { name: String },
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&serde_json::to_string(self).map_err(|_| fmt::Error)?)
    }
}

type FamilyMap = dyn Fn(SetFamily) -> SetFamily + Send + Sync;

#[derive(Clone)]
pub struct ClosureOperator {
    hyperspace: Hyperspace,
    provenance: Provenance,
    map: Arc<FamilyMap>,
}

impl fmt::Debug for ClosureOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ClosureOperator")
            .field("points", &self.hyperspace.points())
            .field("provenance", &self.provenance)
            .finish()
    }
}

impl ClosureOperator {
    pub fn new(
        hyperspace: Hyperspace,
        provenance: Provenance,
        map: impl Fn(SetFamily) -> SetFamily + Send + Sync + 'static,
    ) -> Self {
        ClosureOperator { hyperspace, provenance, map: Arc::new(map) }
    }

    pub fn identity(hyperspace: Hyperspace) -> Self {
        ClosureOperator::new(hyperspace, Provenance::Identity, |f| f)
    }

    pub fn metric(space: &FiniteSpace, side: Side) -> Self {
        let space = space.clone();
        ClosureOperator::new(space.hyperspace(), Provenance::ClMetric { side }, move |f| cl_metric(&space, side, f))
    }

    pub fn bornological(space: &FiniteSpace, ideal: &Ideal, side: Side) -> Self {
        let provenance = Provenance::ClBorn { side, ideal: ideal.describe(space) };
        let (space, ideal) = (space.clone(), *ideal);
        ClosureOperator::new(space.hyperspace(), provenance, move |f| cl_born(&space, &ideal, side, f))
    }

    pub fn tau(space: &FiniteSpace, ideal: &Ideal) -> Self {
        let provenance = Provenance::ClTau { ideal: ideal.describe(space) };
        let (hyperspace, ideal) = (space.hyperspace(), *ideal);
        ClosureOperator::new(hyperspace, provenance, move |f| cl_tau(hyperspace, &ideal, f))
    }

    pub fn lower_mod(space: &FiniteSpace, topology: &HyperTopology, ideal: &Ideal) -> Result<Self, ClosureError> {
        if !topology.is_lower() {
            return Err(ClosureError::NotLowerTopology(topology.name().to_string()));
        }
        let provenance = Provenance::ClLowerMod { topology: topology.name().to_string(), ideal: ideal.describe(space) };
        let (topology, ideal) = (topology.clone(), *ideal);
        Ok(ClosureOperator::new(space.hyperspace(), provenance, move |f| lower_mod_unchecked(&topology, &ideal, f)))
    }

    pub fn upper_mod(space: &FiniteSpace, topology: &HyperTopology, ideal: &Ideal) -> Result<Self, ClosureError> {
        if !topology.is_upper() {
            return Err(ClosureError::NotUpperTopology(topology.name().to_string()));
        }
        let provenance = Provenance::ClUpperMod { topology: topology.name().to_string(), ideal: ideal.describe(space) };
        let (topology, ideal) = (topology.clone(), *ideal);
        Ok(ClosureOperator::new(space.hyperspace(), provenance, move |f| upper_mod_unchecked(&topology, &ideal, f)))
    }

    pub fn apply(&self, family: SetFamily) -> SetFamily {
        (self.map)(family)
    }

    pub fn hyperspace(&self) -> Hyperspace {
        self.hyperspace
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }
}

fn near(e: &Enlargement, side: Side, a: Subset, b: Subset) -> bool {
    match side {
        Side::Lower => a.is_subset_of(e.apply(b)),
        Side::Upper => b.is_subset_of(e.apply(a)),
        Side::Both => a.is_subset_of(e.apply(b)) && b.is_subset_of(e.apply(a)),
    }
}

/// `near` with the left-hand side of each inclusion cut down to `s`.
fn near_within(e: &Enlargement, side: Side, a: Subset, b: Subset, s: Subset) -> bool {
    let lower = || a.intersection(s).is_subset_of(e.apply(b));
    let upper = || b.intersection(s).is_subset_of(e.apply(a));
    match side {
        Side::Lower => lower(),
        Side::Upper => upper(),
        Side::Both => lower() && upper(),
    }
}

/// Closure of `H^-`, `H^+` or the Hausdorff-distance topology.
///
/// `A` is in the result iff for every ε some `B` is ε-near it on the chosen
/// side; nearness only gets harder as ε shrinks.
pub fn cl_metric(space: &FiniteSpace, side: Side, family: SetFamily) -> SetFamily {
    let scales = space.scales();
    space
        .hyperspace()
        .subsets()
        .filter(|&a| scales.for_all_small(|e| family.iter().any(|b| near(e, side, a, b))))
        .collect()
}

fn born_over(space: &FiniteSpace, members: &[Subset], side: Side, family: SetFamily) -> SetFamily {
    let scales = space.scales();
    space
        .hyperspace()
        .subsets()
        .filter(|&a| {
            scales.for_all_small(|e| members.iter().all(|&s| family.iter().any(|b| near_within(e, side, a, b, s))))
        })
        .collect()
}

/// Bornological closure: for every ε and every bounded `S` some `B`
/// satisfies `A ∩ S ⊆ B^ε` (lower), `B ∩ S ⊆ A^ε` (upper) or both.
///
/// The condition weakens as `S` shrinks, so only maximal members are tried.
pub fn cl_born(space: &FiniteSpace, ideal: &Ideal, side: Side, family: SetFamily) -> SetFamily {
    born_over(space, &ideal.maximal_members(), side, family)
}

/// [`cl_born`] quantifying over every member of the ideal.
pub fn cl_born_all_members(space: &FiniteSpace, ideal: &Ideal, side: Side, family: SetFamily) -> SetFamily {
    let members: Vec<Subset> = ideal.members().iter().collect();
    born_over(space, &members, side, family)
}

fn tau_over(hyperspace: Hyperspace, members: &[Subset], family: SetFamily) -> SetFamily {
    hyperspace
        .subsets()
        .filter(|&a| members.iter().all(|&s| family.iter().any(|b| a.intersection(s) == b.intersection(s))))
        .collect()
}

/// Closure of `τ(S)`: `A ∩ S = B ∩ S` for some `B`, for every bounded `S`.
pub fn cl_tau(hyperspace: Hyperspace, ideal: &Ideal, family: SetFamily) -> SetFamily {
    tau_over(hyperspace, &ideal.maximal_members(), family)
}

/// [`cl_tau`] quantifying over every member of the ideal.
pub fn cl_tau_all_members(hyperspace: Hyperspace, ideal: &Ideal, family: SetFamily) -> SetFamily {
    let members: Vec<Subset> = ideal.members().iter().collect();
    tau_over(hyperspace, &members, family)
}

fn lower_mod_unchecked(topology: &HyperTopology, ideal: &Ideal, family: SetFamily) -> SetFamily {
    let closed = topology.closure(family);
    topology.hyperspace().subsets().filter(|&a| ideal.bounded_part(a).is_subfamily_of(closed)).collect()
}

fn upper_mod_unchecked(topology: &HyperTopology, ideal: &Ideal, family: SetFamily) -> SetFamily {
    ideal
        .members()
        .iter()
        .fold(topology.hyperspace().full(), |acc, s| acc.intersection(topology.closure(family.restrict(s))))
}

/// Bornological modification of a lower topology: `A` is in the result iff
/// every bounded subset of `A` is in `cl^T(𝒜)`.
pub fn cl_lower_mod(topology: &HyperTopology, ideal: &Ideal, family: SetFamily) -> Result<SetFamily, ClosureError> {
    if !topology.is_lower() {
        return Err(ClosureError::NotLowerTopology(topology.name().to_string()));
    }
    Ok(lower_mod_unchecked(topology, ideal, family))
}

/// Bornological modification of an upper topology: `A ∈ cl^T(𝒜|_S)` for
/// every bounded `S`.
pub fn cl_upper_mod(topology: &HyperTopology, ideal: &Ideal, family: SetFamily) -> Result<SetFamily, ClosureError> {
    if !topology.is_upper() {
        return Err(ClosureError::NotUpperTopology(topology.name().to_string()));
    }
    Ok(upper_mod_unchecked(topology, ideal, family))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scope {
    /// Every family; at most 4 points.
    Exhaustive,
    /// `trials` seeded random families (pairs, for the binary axioms).
    Sampled { trials: usize, seed: u64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CechAxiom {
    Extensive,
    Monotone,
    Additive,
    EmptyFixed,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomCheck {
    pub axiom: CechAxiom,
    pub passed: bool,
    /// The families that break the axiom, in argument order.
    pub witness: Vec<SetFamily>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CechReport {
    pub checks: Vec<AxiomCheck>,
    pub families_examined: usize,
}

impl CechReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failure(&self) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| !c.passed)
    }
}

fn random_family(rng: &mut ChaCha8Rng, hyperspace: Hyperspace) -> SetFamily {
    SetFamily::from_bits(rng.gen::<u64>()).intersection(hyperspace.full())
}

/// Seeded random families over a hyperspace.
pub fn sample_families(hyperspace: Hyperspace, trials: usize, seed: u64) -> Vec<SetFamily> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..trials).map(|_| random_family(&mut rng, hyperspace)).collect()
}

fn exhaustive_families(hyperspace: Hyperspace) -> Result<Vec<SetFamily>, ClosureError> {
    if hyperspace.points() > 4 {
        return Err(ClosureError::ScopeTooLarge(hyperspace.points()));
    }
    Ok(hyperspace.families())
}

/// Checks the four Čech axioms. Failures are reported with the first
/// witness in (member count, bits) order.
///
/// The exhaustive scan tests monotonicity on one-member extensions and
/// additivity on splits `𝒜 = (𝒜 \ {B}) ∪ {B}`; together with the other
/// axioms these imply the general statements by induction on `|𝒜|`.
pub fn cech_validate(op: &ClosureOperator, scope: Scope) -> Result<CechReport, ClosureError> {
    let hyperspace = op.hyperspace();
    let empty_ok = op.apply(SetFamily::EMPTY).is_empty();
    let mut extensive = None;
    let mut monotone = None;
    let mut additive = None;
    let examined;
    match scope {
        Scope::Exhaustive => {
            let families = exhaustive_families(hyperspace)?;
            examined = families.len();
            let mut table = vec![SetFamily::EMPTY; families.len()];
            for &f in &families {
                table[f.bits() as usize] = op.apply(f);
            }
            let cl = |f: SetFamily| table[f.bits() as usize];
            for &f in &families {
                if extensive.is_none() && !f.is_subfamily_of(cl(f)) {
                    extensive = Some(vec![f]);
                }
                if monotone.is_none() {
                    if let Some(b) =
                        hyperspace.subsets().find(|&b| !f.contains(b) && !cl(f).is_subfamily_of(cl(f.with(b))))
                    {
                        monotone = Some(vec![f, f.with(b)]);
                    }
                }
                if additive.is_none() {
                    if let Some(b) = f.iter().next() {
                        let rest = f.without(b);
                        let single = SetFamily::singleton(b);
                        if cl(f) != cl(rest).union(cl(single)) {
                            additive = Some(vec![rest, single]);
                        }
                    }
                }
            }
        }
        Scope::Sampled { trials, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            examined = 2 * trials;
            for _ in 0..trials {
                let f = random_family(&mut rng, hyperspace);
                let g = random_family(&mut rng, hyperspace);
                let (cf, cg, cfg) = (op.apply(f), op.apply(g), op.apply(f.union(g)));
                if extensive.is_none() && !f.is_subfamily_of(cf) {
                    extensive = Some(vec![f]);
                }
                if monotone.is_none() && !cf.is_subfamily_of(cfg) {
                    monotone = Some(vec![f, f.union(g)]);
                }
                if additive.is_none() && cfg != cf.union(cg) {
                    additive = Some(vec![f, g]);
                }
            }
        }
    }
    let check = |axiom, witness: Option<Vec<SetFamily>>| AxiomCheck {
        axiom,
        passed: witness.is_none(),
        witness: witness.unwrap_or_default(),
    };
    Ok(CechReport {
        checks: vec![
            check(CechAxiom::Extensive, extensive),
            check(CechAxiom::Monotone, monotone),
            check(CechAxiom::Additive, additive),
            check(CechAxiom::EmptyFixed, (!empty_ok).then(|| vec![SetFamily::EMPTY])),
        ],
        families_examined: examined,
    })
}

/// Least op-closed superset, with the number of applications that grew it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Hull {
    pub family: SetFamily,
    pub iterations: usize,
}

pub fn idempotent_hull(op: &ClosureOperator, family: SetFamily) -> Hull {
    let mut current = family;
    let mut iterations = 0;
    loop {
        let next = op.apply(current).union(current);
        if next == current {
            return Hull { family: current, iterations };
        }
        iterations += 1;
        current = next;
    }
}

/// `𝒢` is open iff the closure of its complement misses it.
pub fn is_open(op: &ClosureOperator, family: SetFamily) -> bool {
    !op.apply(op.hyperspace().complement(family)).meets(family)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TopologicalVerdict {
    pub topological: bool,
    pub witness: Option<SetFamily>,
    pub families_examined: usize,
}

/// Idempotency scan: `op(op(𝒜)) = op(𝒜)` for every family in scope.
pub fn is_topological(op: &ClosureOperator, scope: Scope) -> Result<TopologicalVerdict, ClosureError> {
    let families = match scope {
        Scope::Exhaustive => exhaustive_families(op.hyperspace())?,
        Scope::Sampled { trials, seed } => sample_families(op.hyperspace(), trials, seed),
    };
    let witness = families.iter().copied().find(|&f| {
        let once = op.apply(f);
        op.apply(once) != once
    });
    Ok(TopologicalVerdict { topological: witness.is_none(), witness, families_examined: families.len() })
}

/// Closure of the meet of two topologies: the least family containing
/// `family` that both operators fix, found by alternating applications.
pub fn meet_closure(
    first: &ClosureOperator,
    second: &ClosureOperator,
    family: SetFamily,
) -> Result<SetFamily, ClosureError> {
    if first.hyperspace() != second.hyperspace() {
        return Err(ClosureError::HyperspaceMismatch);
    }
    let apply_checked = |op: &ClosureOperator, f: SetFamily| {
        let once = op.apply(f);
        if op.apply(once) != once {
            return Err(ClosureError::NotIdempotentInput { operator: op.provenance().to_string(), family: f });
        }
        Ok(once)
    };
    let mut current = family;
    loop {
        let next = apply_checked(second, apply_checked(first, current)?)?;
        if next == current {
            return Ok(current);
        }
        current = next;
    }
}

/// Open families of the topological reflection: the op-open families.
pub fn reflection_opens(op: &ClosureOperator) -> Result<Vec<SetFamily>, ClosureError> {
    Ok(exhaustive_families(op.hyperspace())?.into_iter().filter(|&g| is_open(op, g)).collect())
}
