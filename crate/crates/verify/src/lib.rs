//! Machine checks of the hyperspace results on finite instance pools.
//!
//! Every check compares two independently computed objects on each instance
//! of a pool and records a replayable witness on failure.
//!
//! ```
//! use bornlab_verify::{verify_checks, InstancePool};
//!
//! let pool = InstancePool::standard(7, 2, 20).unwrap();
//! let report = verify_checks(&pool, &["o"]).unwrap();
//! assert!(report.check("o").unwrap().passed);
//! ```

use std::time::Instant;

use bornlab::InstanceError;

mod checks;
mod pool;
mod report;
mod search;

pub use checks::{check_ids, registry, CheckDef, Unit, Verdict};
pub use pool::{
    table_topologies, InstancePool, PoolError, PoolPolicy, PoolSpace, DEFAULT_SEED, DEFAULT_TRIALS,
    RANDOM_FOUR_POINT_SPACES,
};
pub use report::{Branches, CheckResult, PoolSummary, Report, SearchOutcome, Witness};
pub use search::{search_counterexample, SearchError, TARGETS};

#[derive(Debug, thiserror::Error)]
pub enum VerifyError {
    #[error("unknown check {0:?}")]
    UnknownCheck(String),
    #[error("witness does not rebuild: {0}")]
    Witness(#[from] InstanceError),
    #[error("witness has no ideal")]
    MissingIdeal,
}

fn summarize(pool: &InstancePool) -> PoolSummary {
    PoolSummary {
        spaces: pool.spaces.len(),
        exhaustive_spaces: pool.spaces.iter().filter(|s| s.exhaustive()).count(),
        sampled_spaces: pool.spaces.iter().filter(|s| !s.exhaustive()).count(),
        ideals: pool.spaces.iter().map(|s| s.ideals.len()).sum(),
        lower_topologies: pool.spaces.iter().map(|s| s.lower.len()).sum(),
        upper_topologies: pool.spaces.iter().map(|s| s.upper.len()).sum(),
        miss_topologies: pool.spaces.iter().map(|s| s.miss().count()).sum(),
    }
}

/// Runs the checks named in `ids` (all of them when empty); searches run
/// only with the full suite on a nonempty pool.
pub fn verify_checks(pool: &InstancePool, ids: &[&str]) -> Result<Report, VerifyError> {
    let start = Instant::now();
    let all = registry();
    if let Some(bad) = ids.iter().find(|id| !all.iter().any(|c| c.id == **id)) {
        return Err(VerifyError::UnknownCheck(bad.to_string()));
    }
    let checks: Vec<CheckResult> =
        all.iter().filter(|c| ids.is_empty() || ids.contains(&c.id)).filter_map(|c| c.run(pool)).collect();
    let searches = if ids.is_empty() && !pool.is_empty() { search::run_searches(pool) } else { Vec::new() };
    Ok(Report {
        seed: pool.seed,
        trials: pool.trials,
        pool: summarize(pool),
        passed: checks.iter().all(|c| c.passed),
        checks,
        searches,
        wall_time: start.elapsed(),
    })
}

/// The whole suite.
pub fn verify_suite(pool: &InstancePool) -> Report {
    verify_checks(pool, &[]).expect("the full suite has no unknown checks")
}

/// Rebuilds the unit a witness came from.
pub fn witness_unit(witness: &Witness) -> Result<Unit, VerifyError> {
    let space = witness.space()?;
    let ideal = witness.instance.ideal(&space)?.ok_or(VerifyError::MissingIdeal)?;
    Ok(Unit {
        space_name: witness.space_name.clone(),
        other: witness.other_ideal(&space)?,
        topology: witness.instance.topology(&space)?,
        ideal,
        space,
        variant: witness.variant.clone(),
        seed: witness.seed,
        trials: witness.trials,
    })
}

/// Re-evaluates a check witness. Search witnesses replay to a failing
/// verdict when the searched phenomenon reappears.
pub fn replay(witness: &Witness) -> Result<Verdict, VerifyError> {
    let unit = witness_unit(witness)?;
    if TARGETS.contains(&witness.check.as_str()) {
        return Ok(match search::evaluate(&witness.check, &unit) {
            Some((family, detail)) => Verdict::Fail { detail, family, comparisons: 1 },
            None => Verdict::Pass { branch: None, comparisons: 1, notes: Vec::new() },
        });
    }
    let check = registry()
        .into_iter()
        .find(|c| c.id == witness.check)
        .ok_or_else(|| VerifyError::UnknownCheck(witness.check.clone()))?;
    Ok(check.evaluate(&unit))
}
