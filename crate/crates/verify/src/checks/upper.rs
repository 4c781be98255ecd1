use bornlab::{
    cl_born, cl_tau, cobounded_family, hit_family, idempotent_hull, is_topological, make_topology, plus_ideal,
    reflection_opens, stable_under_small_enlargements, updown, ClosureOperator, Direction, HyperTopology, Ideal, Scope,
    SetFamily, Side, Subset, TopologySpec,
};

use super::lower::{coarser_candidates, small};
use super::{
    compare_opens, fail, iff, lift, not_finer, pass, sorted, CheckDef, Hypothesis, Over, Unit, UnitBuilder, Verdict,
};

pub(super) fn checks() -> Vec<CheckDef> {
    vec![
        CheckDef {
            id: "l",
            anchor: "upper reflection opens are the unions of down-sets over stable cobounded collections",
            universality: false,
            hypothesis: Hypothesis::Any,
            units: |ps, trials| small(ps, trials, Over::Ideals, "born-upper"),
            eval: eval_l,
        },
        CheckDef {
            id: "m",
            anchor: "the upper reflection is the finest miss topology inside H+ with dense cobounded sets",
            universality: true,
            hypothesis: Hypothesis::Any,
            units: |ps, trials| small(ps, trials, Over::Ideals, "born-upper"),
            eval: eval_m,
        },
        CheckDef {
            id: "n",
            anchor: "the upper reflection closure is the upper bornological closure of the plus ideal",
            universality: false,
            hypothesis: Hypothesis::Any,
            units: |ps, trials| UnitBuilder::new(ps, trials).over(Over::Ideals, "born-upper").build(),
            eval: eval_n,
        },
        CheckDef {
            id: "o",
            anchor: "the plus ideal is stable under small enlargements",
            universality: false,
            hypothesis: Hypothesis::Any,
            units: |ps, trials| UnitBuilder::new(ps, trials).over(Over::Ideals, "plus").build(),
            eval: eval_o,
        },
        CheckDef {
            id: "p",
            anchor: "upper modification of a miss topology lies between the two composites",
            universality: false,
            hypothesis: Hypothesis::Any,
            units: |ps, trials| {
                let mut units = UnitBuilder::new(ps, trials).over(Over::Miss, "upper-mod").build();
                units.extend(UnitBuilder::new(ps, trials).over(Over::Ideals, "born-upper").build());
                units
            },
            eval: eval_p,
        },
        CheckDef {
            id: "q",
            anchor: "upper modification finer criterion via the empty set",
            universality: false,
            hypothesis: Hypothesis::Miss,
            units: |ps, trials| small(ps, trials, Over::UpperPairs, "upper-mod"),
            eval: eval_q,
        },
        CheckDef {
            id: "r",
            anchor: "upper modification of a miss topology is topological iff cobounded neighbourhoods lift",
            universality: false,
            hypothesis: Hypothesis::Any,
            units: |ps, trials| small(ps, trials, Over::Miss, "upper-mod"),
            eval: eval_r,
        },
        CheckDef {
            id: "s",
            anchor: "upper modification of a miss topology is topological iff hit closures are intersections of hit families",
            universality: false,
            hypothesis: Hypothesis::Any,
            units: |ps, trials| small(ps, trials, Over::Miss, "upper-mod"),
            eval: eval_s,
        },
        CheckDef {
            id: "t",
            anchor: "T meet tau(S) is the finest coboundedly generated topology coarser than an upper T",
            universality: true,
            hypothesis: Hypothesis::Any,
            units: |ps, trials| small(ps, trials, Over::Upper, "upper-mod"),
            eval: eval_t,
        },
    ]
}

fn upper_mod(u: &Unit, t: &HyperTopology, ideal: &Ideal) -> Result<ClosureOperator, Verdict> {
    lift(ClosureOperator::upper_mod(&u.space, t, ideal))
}

fn eval_l(u: &Unit) -> Verdict {
    let hs = u.space.hyperspace();
    let op = ClosureOperator::bornological(&u.space, &u.ideal, Side::Upper);
    let opens = sorted(tri!(lift(reflection_opens(&op))));
    let unions: Vec<SetFamily> = cobounded_family(&u.space, &u.ideal)
        .subfamilies()
        .filter(|&c| stable_under_small_enlargements(&u.space, c))
        .map(|c| updown(hs, c, Direction::Down))
        .collect();
    compare_opens(&u.space, &opens, &sorted(unions), "a union of down-sets over a stable cobounded collection")
}

fn eval_m(u: &Unit) -> Verdict {
    let hs = u.space.hyperspace();
    let op = ClosureOperator::bornological(&u.space, &u.ideal, Side::Upper);
    let reflection = HyperTopology::reflection_of(&op);
    let h_plus = tri!(lift(make_topology(&u.space, &TopologySpec::MetricUpper)));
    let cobounded = cobounded_family(&u.space, &u.ideal);
    if !reflection.is_miss() {
        return fail("the upper reflection is not a miss topology", None, 1);
    }
    if reflection.closure(cobounded) != hs.full() {
        return fail("cobounded sets are not dense in the upper reflection", Some(cobounded), 2);
    }
    if !reflection.is_coarser_than(&h_plus) {
        return fail("the upper reflection is not coarser than H+", None, 3);
    }
    let generators: Vec<SetFamily> = hs
        .subsets()
        .map(|g| updown(hs, SetFamily::singleton(g), Direction::Down))
        .filter(|&down| h_plus.is_open(down))
        .collect();
    let mut comparisons = 3;
    let mut notes = Vec::new();
    for pick in 0u64..(1 << generators.len()) {
        let subbase: Vec<SetFamily> =
            generators.iter().enumerate().filter(|(i, _)| pick >> i & 1 == 1).map(|(_, &g)| g).collect();
        let candidate = HyperTopology::from_subbase(format!("miss-candidate-{pick}"), hs, subbase);
        comparisons += 1;
        if candidate.closure(cobounded) == hs.full() {
            notes.push("dense miss candidate");
            if !candidate.is_coarser_than(&reflection) {
                return fail(
                    "a miss topology inside H+ with dense cobounded sets is finer than the upper reflection",
                    None,
                    comparisons,
                );
            }
        }
    }
    Verdict::Pass { branch: None, comparisons, notes }
}

fn eval_n(u: &Unit) -> Verdict {
    let families = u.families();
    let op = ClosureOperator::bornological(&u.space, &u.ideal, Side::Upper);
    let plus = tri!(lift(plus_ideal(&u.space, &u.ideal)));
    for &f in &families {
        let hull = idempotent_hull(&op, f).family;
        let expected = cl_born(&u.space, &plus, Side::Upper, f);
        if hull != expected {
            return fail(
                format!("hull {} versus plus closure {}", u.space.format_family(hull), u.space.format_family(expected)),
                Some(f),
                families.len() as u64,
            );
        }
    }
    pass(families.len() as u64)
}

fn eval_o(u: &Unit) -> Verdict {
    let plus = tri!(lift(plus_ideal(&u.space, &u.ideal)));
    if !plus.is_subideal_of(&u.ideal) {
        return fail(format!("plus ideal {} is not inside the ideal", plus.describe(&u.space)), None, 1);
    }
    if !stable_under_small_enlargements(&u.space, plus.members()) {
        return fail(format!("plus ideal {} is not stable", plus.describe(&u.space)), Some(plus.members()), 2);
    }
    pass(2)
}

fn eval_p(u: &Unit) -> Verdict {
    let families = u.families();
    let hs = u.space.hyperspace();
    if u.variant == "born-upper" {
        let h_plus = tri!(lift(make_topology(&u.space, &TopologySpec::MetricUpper)));
        let modified = tri!(upper_mod(u, &h_plus, &u.ideal));
        return match families.iter().find(|&&f| cl_born(&u.space, &u.ideal, Side::Upper, f) != modified.apply(f)) {
            Some(&f) => {
                fail("upper bornological closure differs from the modification of H+", Some(f), families.len() as u64)
            }
            None => pass(families.len() as u64),
        };
    }
    let t = u.topology();
    let modified = tri!(upper_mod(u, t, &u.ideal));
    for &f in &families {
        let inner = t.closure(cl_tau(hs, &u.ideal, f));
        let middle = modified.apply(f);
        let outer = cl_tau(hs, &u.ideal, t.closure(f));
        if !inner.is_subfamily_of(middle) {
            return fail(
                "the T-closure of the tau closure is not inside the modification",
                Some(f),
                2 * families.len() as u64,
            );
        }
        if !middle.is_subfamily_of(outer) {
            return fail(
                "the modification is not inside the tau closure of the T-closure",
                Some(f),
                2 * families.len() as u64,
            );
        }
    }
    pass(2 * families.len() as u64)
}

fn eval_q(u: &Unit) -> Verdict {
    let families = u.families();
    let t = u.topology();
    let (s, star) = (&u.ideal, &u.other());
    let finer = not_finer(&tri!(upper_mod(u, t, s)), &tri!(upper_mod(u, t, star)), &families).is_none();
    let criterion = star.members().iter().all(|m| {
        let differences: SetFamily = s.members().iter().map(|b| m.difference(b)).collect();
        t.closure(differences).contains(Subset::EMPTY)
    });
    iff(finer, criterion, families.len() as u64, "finer versus the empty set in the closure of differences")
}

fn eval_r(u: &Unit) -> Verdict {
    let t = u.topology();
    let hs = u.space.hyperspace();
    let op = tri!(upper_mod(u, t, &u.ideal));
    let verdict = tri!(lift(is_topological(&op, Scope::Exhaustive)));
    let cobounded = cobounded_family(&u.space, &u.ideal);
    let lifts = hs.subsets().all(|a| {
        cobounded.iter().all(|c| {
            let down = updown(hs, SetFamily::singleton(c), Direction::Down);
            !t.is_neighbourhood(down, a)
                || cobounded.iter().any(|lifted| a.is_subset_of(lifted) && t.is_neighbourhood(down, lifted))
        })
    });
    iff(verdict.topological, lifts, verdict.families_examined as u64, "topological versus cobounded lifting")
}

fn eval_s(u: &Unit) -> Verdict {
    let t = u.topology();
    let hs = u.space.hyperspace();
    let op = tri!(upper_mod(u, t, &u.ideal));
    let verdict = tri!(lift(is_topological(&op, Scope::Exhaustive)));
    let hits: Vec<SetFamily> = u.ideal.members().iter().map(|s| hit_family(hs, s)).collect();
    let intersections = u.ideal.members().iter().all(|s| {
        let closure = t.closure(hit_family(hs, s));
        let cover = hits.iter().filter(|h| closure.is_subfamily_of(**h)).fold(hs.full(), |acc, &h| acc.intersection(h));
        cover == closure
    });
    iff(verdict.topological, intersections, verdict.families_examined as u64, "topological versus hit intersections")
}

fn coboundedly_generated(t: &HyperTopology, cobounded: SetFamily, families: &[SetFamily]) -> Option<SetFamily> {
    let hs = t.hyperspace();
    families.iter().copied().find(|&f| {
        let cl = t.closure(f);
        let generated: SetFamily =
            hs.subsets().filter(|&a| cobounded.iter().filter(|&c| a.is_subset_of(c)).all(|c| cl.contains(c))).collect();
        generated != cl
    })
}

fn eval_t(u: &Unit) -> Verdict {
    let families = u.families();
    let t = u.topology();
    let tau = tri!(lift(make_topology(&u.space, &TopologySpec::Tau(u.ideal))));
    let reflection = t.meet(&tau);
    let cobounded = cobounded_family(&u.space, &u.ideal);
    let mut comparisons = families.len() as u64;
    if !reflection.is_coarser_than(t) {
        return fail("T meet tau(S) is not coarser than T", None, comparisons);
    }
    if let Some(f) = coboundedly_generated(&reflection, cobounded, &families) {
        return fail("T meet tau(S) is not coboundedly generated", Some(f), comparisons);
    }
    let mut notes = Vec::new();
    for candidate in tri!(coarser_candidates(u, t)) {
        comparisons += families.len() as u64;
        if coboundedly_generated(&candidate, cobounded, &families).is_none() {
            notes.push("coboundedly generated candidate");
            if !candidate.is_coarser_than(&reflection) {
                return fail(
                    format!("{} is coboundedly generated but not coarser than T meet tau(S)", candidate.name()),
                    None,
                    comparisons,
                );
            }
        }
    }
    Verdict::Pass { branch: None, comparisons, notes }
}
