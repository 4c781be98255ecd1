use bornlab::{
    cl_tau, hat_ideal, idempotent_hull, is_topological, make_topology, minus_ideal, reflection_opens, satisfies_club,
    star_ideal, tb_hull, updown, ClosureOperator, Direction, HyperTopology, Ideal, Scope, SetFamily, Side,
    TopologySpec,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{
    compare_opens, fail, iff, lift, not_finer, pass, sorted, table, CheckDef, Hypothesis, Over, Unit, UnitBuilder,
    Verdict,
};
use crate::pool::PoolSpace;

pub(super) fn checks() -> Vec<CheckDef> {
    vec![
        CheckDef {
            id: "a",
            anchor: "lower reflection opens are the unions of up-sets over club subfamilies",
            universality: false,
            hypothesis: Hypothesis::Any,
            units: |ps, trials| small(ps, trials, Over::Ideals, "born-lower"),
            eval: eval_a,
        },
        CheckDef {
            id: "b",
            anchor: "every ideal contains a largest hat-stable ideal",
            universality: false,
            hypothesis: Hypothesis::Any,
            units: |ps, trials| UnitBuilder::new(ps, trials).over(Over::Ideals, "star").build(),
            eval: eval_b,
        },
        CheckDef {
            id: "c",
            anchor: "lower bornological closures: finer iff contained in the totally bounded hull",
            universality: false,
            hypothesis: Hypothesis::Metric,
            units: |ps, trials| small(ps, trials, Over::IdealPairs, "born-lower"),
            eval: eval_c,
        },
        CheckDef {
            id: "d",
            anchor: "a bornological lower reflection is given by the minus ideal",
            universality: false,
            hypothesis: Hypothesis::Metric,
            units: |ps, trials| small(ps, trials, Over::Ideals, "born-lower"),
            eval: eval_d,
        },
        CheckDef {
            id: "f",
            anchor: "lower modification finer criterion via bounded parts",
            universality: false,
            hypothesis: Hypothesis::Any,
            units: |ps, trials| small(ps, trials, Over::LowerPairs, "lower-mod"),
            eval: eval_f,
        },
        CheckDef {
            id: "h",
            anchor: "lower modification factors through the tau closure",
            universality: false,
            hypothesis: Hypothesis::Any,
            units: |ps, trials| {
                let mut units = UnitBuilder::new(ps, trials).over(Over::Lower, "lower-mod").build();
                units.extend(UnitBuilder::new(ps, trials).over(Over::Ideals, "born-lower").build());
                units
            },
            eval: eval_h,
        },
        CheckDef {
            id: "i",
            anchor: "lower modification is topological iff the tau closure preserves closed families",
            universality: false,
            hypothesis: Hypothesis::Any,
            units: |ps, trials| small(ps, trials, Over::Lower, "lower-mod"),
            eval: eval_i,
        },
        CheckDef {
            id: "k",
            anchor: "T meet tau(S) is the finest boundedly generated topology coarser than T",
            universality: true,
            hypothesis: Hypothesis::Any,
            units: |ps, trials| small(ps, trials, Over::Lower, "lower-mod"),
            eval: eval_k,
        },
    ]
}

/// Units on exhaustively enumerable spaces only.
pub(super) fn small(ps: &PoolSpace, trials: usize, over: Over, variant: &str) -> Vec<Unit> {
    if !ps.exhaustive() {
        return Vec::new();
    }
    UnitBuilder::new(ps, trials).over(over, variant).build()
}

fn lower_mod(u: &Unit, t: &HyperTopology, ideal: &Ideal) -> Result<ClosureOperator, Verdict> {
    lift(ClosureOperator::lower_mod(&u.space, t, ideal))
}

fn eval_a(u: &Unit) -> Verdict {
    let s = &u.ideal;
    let hs = u.space.hyperspace();
    let op = ClosureOperator::bornological(&u.space, s, Side::Lower);
    let opens = sorted(tri!(lift(reflection_opens(&op))));
    let mut unions = Vec::new();
    for sub in s.members().subfamilies() {
        if tri!(lift(satisfies_club(&u.space, sub, s))) {
            unions.push(updown(hs, sub, Direction::Up));
        }
    }
    compare_opens(&u.space, &opens, &sorted(unions), "a union of up-sets over a club subfamily")
}

fn eval_b(u: &Unit) -> Verdict {
    let s = &u.ideal;
    let star = tri!(lift(star_ideal(&u.space, s)));
    let mut comparisons = 2;
    if tri!(lift(hat_ideal(&u.space, &star.ideal))) != star.ideal {
        return fail(format!("star {} is not hat-stable", star.ideal.describe(&u.space)), None, comparisons);
    }
    if star.iterations > s.len() || !star.ideal.is_subideal_of(s) {
        return fail(format!("star took {} iterations on {} members", star.iterations, s.len()), None, comparisons);
    }
    let mut notes = Vec::new();
    if u.exhaustive() {
        for sub in s.sub_ideals() {
            comparisons += 1;
            let stable = tri!(lift(hat_ideal(&u.space, &sub))) == sub;
            let inside = sub.is_subideal_of(&star.ideal);
            if stable && !inside {
                return fail(
                    format!("hat-stable {} is not inside the star ideal", sub.describe(&u.space)),
                    None,
                    comparisons,
                );
            }
            if inside && !stable {
                notes.push("sub-ideal of star that is not hat-stable");
            }
        }
        let op = ClosureOperator::bornological(&u.space, &star.ideal, Side::Lower);
        let verdict = tri!(lift(is_topological(&op, Scope::Exhaustive)));
        comparisons += verdict.families_examined as u64;
        if !verdict.topological {
            return fail("lower closure of the star ideal is not topological", verdict.witness, comparisons);
        }
        for sub in s.sub_ideals() {
            let op = ClosureOperator::bornological(&u.space, &sub, Side::Lower);
            let verdict = tri!(lift(is_topological(&op, Scope::Exhaustive)));
            comparisons += verdict.families_examined as u64;
            if verdict.topological && !sub.is_subideal_of(&star.ideal) {
                return fail(
                    format!(
                        "{} gives a topological lower closure but is not inside the star ideal",
                        sub.describe(&u.space)
                    ),
                    None,
                    comparisons,
                );
            }
        }
    }
    Verdict::Pass { branch: None, comparisons, notes }
}

fn eval_c(u: &Unit) -> Verdict {
    let families = u.families();
    let (s, t) = (&u.ideal, &u.other());
    let finer = not_finer(
        &ClosureOperator::bornological(&u.space, s, Side::Lower),
        &ClosureOperator::bornological(&u.space, t, Side::Lower),
        &families,
    )
    .is_none();
    let tb = tri!(lift(tb_hull(&u.space, s)));
    iff(finer, t.is_subideal_of(&tb), families.len() as u64, "finer versus containment in the totally bounded hull")
}

fn eval_d(u: &Unit) -> Verdict {
    let families = u.families();
    let op = ClosureOperator::bornological(&u.space, &u.ideal, Side::Lower);
    let hull: Vec<SetFamily> = families.iter().map(|&f| idempotent_hull(&op, f).family).collect();
    let minus = tri!(lift(minus_ideal(&u.space, &u.ideal)));
    let minus_table = table(&ClosureOperator::bornological(&u.space, &minus, Side::Lower), &families);
    let mut comparisons = families.len() as u64;
    let mut matched = false;
    for other in Ideal::all(u.space.hyperspace()) {
        comparisons += families.len() as u64;
        if table(&ClosureOperator::bornological(&u.space, &other, Side::Lower), &families) == hull {
            matched = true;
            if minus_table != hull {
                let family =
                    families.iter().zip(&minus_table).zip(&hull).find(|((_, a), b)| a != b).map(|((f, _), _)| *f);
                return fail(
                    format!(
                        "{} reproduces the reflection but the minus ideal {} does not",
                        other.describe(&u.space),
                        minus.describe(&u.space)
                    ),
                    family,
                    comparisons,
                );
            }
        }
    }
    Verdict::Pass { branch: Some(matched), comparisons, notes: Vec::new() }
}

fn eval_f(u: &Unit) -> Verdict {
    let families = u.families();
    let t = u.topology();
    let (s, star) = (&u.ideal, &u.other());
    let finer = not_finer(&tri!(lower_mod(u, t, s)), &tri!(lower_mod(u, t, star)), &families).is_none();
    let criterion = star.members().iter().all(|m| t.closure(s.bounded_part(m)).contains(m));
    iff(finer, criterion, families.len() as u64, "finer versus bounded parts in the closure")
}

fn eval_h(u: &Unit) -> Verdict {
    let families = u.families();
    let hs = u.space.hyperspace();
    let (left, right) = match u.variant.as_str() {
        "born-lower" => {
            let h_minus = tri!(lift(make_topology(&u.space, &TopologySpec::MetricLower)));
            (ClosureOperator::bornological(&u.space, &u.ideal, Side::Lower), tri!(lower_mod(u, &h_minus, &u.ideal)))
        }
        _ => {
            let t = u.topology().clone();
            let s = u.ideal;
            let composed =
                ClosureOperator::new(hs, bornlab::Provenance::Custom { name: "tau after T".into() }, move |f| {
                    cl_tau(hs, &s, t.closure(f))
                });
            (tri!(lower_mod(u, u.topology(), &u.ideal)), composed)
        }
    };
    match families.iter().find(|&&f| left.apply(f) != right.apply(f)) {
        Some(&f) => fail(
            format!(
                "closures differ: {} versus {}",
                u.space.format_family(left.apply(f)),
                u.space.format_family(right.apply(f))
            ),
            Some(f),
            families.len() as u64,
        ),
        None => pass(families.len() as u64),
    }
}

fn eval_i(u: &Unit) -> Verdict {
    let t = u.topology();
    let hs = u.space.hyperspace();
    let op = tri!(lower_mod(u, t, &u.ideal));
    let verdict = tri!(lift(is_topological(&op, Scope::Exhaustive)));
    let preserves = hs.families().into_iter().filter(|&f| t.is_closed(f)).all(|f| t.is_closed(cl_tau(hs, &u.ideal, f)));
    iff(
        verdict.topological,
        preserves,
        2 * verdict.families_examined as u64,
        "topological versus preservation of closed families",
    )
}

/// Candidate topologies coarser than `t`: `t`, the indiscrete topology and
/// a few generated by random selections of its opens.
pub(super) fn coarser_candidates(u: &Unit, t: &HyperTopology) -> Result<Vec<HyperTopology>, Verdict> {
    let hs = u.space.hyperspace();
    let opens = lift(t.opens())?;
    let mut rng = ChaCha8Rng::seed_from_u64(u.seed);
    let mut out = vec![t.clone(), HyperTopology::indiscrete(hs)];
    for k in 0..6 {
        let subbase: Vec<SetFamily> = opens.iter().copied().filter(|_| rng.gen_bool(0.5)).collect();
        out.push(HyperTopology::from_subbase(format!("candidate-{k}"), hs, subbase));
    }
    Ok(out)
}

fn boundedly_generated(t: &HyperTopology, ideal: &Ideal, families: &[SetFamily]) -> Option<SetFamily> {
    let hs = t.hyperspace();
    families.iter().copied().find(|&f| {
        let cl = t.closure(f);
        let generated: SetFamily = hs.subsets().filter(|&a| ideal.bounded_part(a).is_subfamily_of(cl)).collect();
        generated != cl
    })
}

fn eval_k(u: &Unit) -> Verdict {
    let families = u.families();
    let t = u.topology();
    let tau = tri!(lift(make_topology(&u.space, &TopologySpec::Tau(u.ideal))));
    let reflection = t.meet(&tau);
    let mut comparisons = families.len() as u64;
    if !reflection.is_coarser_than(t) {
        return fail("T meet tau(S) is not coarser than T", None, comparisons);
    }
    if let Some(f) = boundedly_generated(&reflection, &u.ideal, &families) {
        return fail("T meet tau(S) is not boundedly generated", Some(f), comparisons);
    }
    let mut notes = Vec::new();
    for candidate in tri!(coarser_candidates(u, t)) {
        comparisons += families.len() as u64;
        if boundedly_generated(&candidate, &u.ideal, &families).is_none() {
            notes.push("boundedly generated candidate");
            if !candidate.is_coarser_than(&reflection) {
                return fail(
                    format!("{} is boundedly generated but not coarser than T meet tau(S)", candidate.name()),
                    None,
                    comparisons,
                );
            }
        }
    }
    Verdict::Pass { branch: None, comparisons, notes }
}
