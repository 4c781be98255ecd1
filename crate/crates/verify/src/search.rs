//! Scans for finite counterexamples to statements the theory only refutes
//! on infinite spaces.

use bornlab::{
    is_topological, make_topology, ClosureOperator, HyperTopology, Ideal, Scope, SetFamily, Side, TopologySpec,
};

use crate::checks::Unit;
use crate::pool::{splitmix, InstancePool, PoolSpace};
use crate::report::{SearchOutcome, Witness};

/// Search targets, by identifier.
pub const TARGETS: [&str; 3] = ["h-vs-meet", "lower-mod-nontopological", "upper-mod-nontopological"];

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SearchError {
    #[error(
        "unknown search target {0:?}; expected one of h-vs-meet, lower-mod-nontopological, upper-mod-nontopological"
    )]
    UnknownTarget(String),
}

fn witness(target: &str, unit: &Unit, family: Option<SetFamily>, detail: String) -> Witness {
    Witness::new(
        target,
        &unit.space_name,
        &unit.space,
        &unit.ideal,
        None,
        unit.topology.as_ref(),
        family,
        &unit.variant,
        unit.seed,
        unit.trials,
        detail,
    )
}

fn unit(ps: &PoolSpace, ideal: Ideal, topology: Option<&HyperTopology>, variant: &str, trials: usize) -> Unit {
    Unit {
        space_name: ps.name.clone(),
        space: ps.space.clone(),
        ideal,
        other: None,
        topology: topology.cloned(),
        variant: variant.to_string(),
        seed: splitmix(ps.seed ^ 0x5eed),
        trials,
    }
}

/// Finds a family separating the two topologies, if they differ.
fn separating_family(a: &HyperTopology, b: &HyperTopology) -> Option<SetFamily> {
    let hs = a.hyperspace();
    hs.subsets().find_map(|x| {
        let (ua, ub) = (a.min_neighbourhood(x), b.min_neighbourhood(x));
        if ua == ub {
            None
        } else if !b.is_open(ua) {
            Some(hs.complement(ua))
        } else {
            Some(hs.complement(ub))
        }
    })
}

/// The family on which `unit`'s target fails, if it does.
pub(crate) fn evaluate(target: &str, unit: &Unit) -> Option<(Option<SetFamily>, String)> {
    let space = &unit.space;
    match target {
        "h-vs-meet" => {
            let reflection =
                HyperTopology::reflection_of(&ClosureOperator::bornological(space, &unit.ideal, Side::Both));
            let h = make_topology(space, &TopologySpec::MetricBoth).ok()?;
            let tau = make_topology(space, &TopologySpec::Tau(unit.ideal)).ok()?;
            let meet = h.meet(&tau);
            separating_family(&reflection, &meet).map(|f| {
                let detail = format!(
                    "{} is closed in exactly one of H(S) and H meet tau(S) for S = {}",
                    space.format_family(f),
                    unit.ideal.describe(space)
                );
                (Some(f), detail)
            })
        }
        _ => {
            let t = unit.topology.as_ref()?;
            let op = if target == "lower-mod-nontopological" {
                ClosureOperator::lower_mod(space, t, &unit.ideal).ok()?
            } else {
                ClosureOperator::upper_mod(space, t, &unit.ideal).ok()?
            };
            let scope = if space.len() <= 4 {
                Scope::Exhaustive
            } else {
                Scope::Sampled { trials: unit.trials, seed: unit.seed }
            };
            let verdict = is_topological(&op, scope).ok()?;
            let family = verdict.witness?;
            let once = op.apply(family);
            let detail = format!(
                "closure of {} under {} is {} but applying it again gives {}",
                space.format_family(family),
                t.name(),
                space.format_family(once),
                space.format_family(op.apply(once))
            );
            Some((Some(family), detail))
        }
    }
}

fn candidates(target: &str, ps: &PoolSpace, trials: usize) -> Vec<Unit> {
    let mut out = Vec::new();
    match target {
        "h-vs-meet" => {
            for &s in &ps.ideals {
                out.push(unit(ps, s, None, "born-both", trials));
            }
        }
        "lower-mod-nontopological" => {
            for t in &ps.lower {
                for &s in &ps.ideals {
                    out.push(unit(ps, s, Some(t), "lower-mod", trials));
                }
            }
        }
        _ => {
            let ordered = ps.miss().chain(ps.upper.iter().filter(|t| !t.is_miss()));
            for t in ordered {
                for &s in &ps.ideals {
                    out.push(unit(ps, s, Some(t), "upper-mod", trials));
                }
            }
        }
    }
    out
}

/// First witness for `target` in `pool`, scanning spaces in pool order.
pub fn search_counterexample(target: &str, pool: &InstancePool) -> Result<Option<Witness>, SearchError> {
    if !TARGETS.contains(&target) {
        return Err(SearchError::UnknownTarget(target.to_string()));
    }
    for ps in &pool.spaces {
        for u in candidates(target, ps, pool.trials) {
            if let Some((family, detail)) = evaluate(target, &u) {
                return Ok(Some(witness(target, &u, family, detail)));
            }
        }
    }
    Ok(None)
}

/// Every target over the whole pool and over its true metric spaces.
pub(crate) fn run_searches(pool: &InstancePool) -> Vec<SearchOutcome> {
    let metric = pool.filtered(|ps| ps.space.is_metric());
    let mut out = Vec::new();
    for target in TARGETS {
        for (name, sub) in [("full", pool), ("metric", &metric)] {
            let witness = search_counterexample(target, sub).expect("known target");
            out.push(SearchOutcome {
                target: target.to_string(),
                pool: name.to_string(),
                spaces: sub.spaces.len(),
                found: witness.is_some(),
                witness,
            });
        }
    }
    out
}
