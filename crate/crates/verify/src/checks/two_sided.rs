use bornlab::{
    cech_validate, cl_tau, cl_tau_all_members, idempotent_hull, make_topology, meet_closure, plus_ideal,
    reflection_opens, BracketFamily, ClosureOperator, Enlargement, HyperTopology, Ideal, Scope, SetFamily, Side,
    Subset, TopologySpec,
};

use super::lower::small;
use super::{compare_opens, fail, lift, pass, sorted, table, CheckDef, Hypothesis, Over, Unit, UnitBuilder, Verdict};

pub(super) fn checks() -> Vec<CheckDef> {
    vec![
        CheckDef {
            id: "e",
            anchor: "lower and upper modifications are closure operators",
            universality: false,
            hypothesis: Hypothesis::Any,
            units: |ps, trials| {
                let mut units = UnitBuilder::new(ps, trials).over(Over::Lower, "lower-mod").build();
                units.extend(UnitBuilder::new(ps, trials).over(Over::Upper, "upper-mod").build());
                units
            },
            eval: eval_e,
        },
        CheckDef {
            id: "g",
            anchor: "tau(S) closure agrees on bounded traces, with the directed-family lemma",
            universality: false,
            hypothesis: Hypothesis::Any,
            units: |ps, trials| UnitBuilder::new(ps, trials).over(Over::Ideals, "tau").build(),
            eval: eval_g,
        },
        CheckDef {
            id: "j",
            anchor: "the topological reflection of a modification is T meet tau(S)",
            universality: false,
            hypothesis: Hypothesis::Any,
            units: |ps, trials| {
                let mut b = UnitBuilder::new(ps, trials);
                b = b.over(Over::Lower, "lower-mod").over(Over::Miss, "upper-mod");
                b.over(Over::Ideals, "born-lower").over(Over::Ideals, "born-upper").build()
            },
            eval: eval_j,
        },
        CheckDef {
            id: "u",
            anchor: "two-sided reflection opens are uniform neighbourhoods of brackets",
            universality: false,
            hypothesis: Hypothesis::Metric,
            units: |ps, trials| small(ps, trials, Over::Ideals, "born-both"),
            eval: eval_u,
        },
        CheckDef {
            id: "v",
            anchor: "a bornological two-sided reflection is given by the plus ideal",
            universality: false,
            hypothesis: Hypothesis::Any,
            units: |ps, trials| small(ps, trials, Over::Ideals, "born-both"),
            eval: eval_v,
        },
    ]
}

/// The operator a modification unit is about.
pub(super) fn modification(u: &Unit) -> Result<ClosureOperator, Verdict> {
    let t = u.topology();
    match u.variant.as_str() {
        "lower-mod" => lift(ClosureOperator::lower_mod(&u.space, t, &u.ideal)),
        _ => lift(ClosureOperator::upper_mod(&u.space, t, &u.ideal)),
    }
}

pub(super) fn scope(u: &Unit) -> Scope {
    if u.exhaustive() {
        Scope::Exhaustive
    } else {
        Scope::Sampled { trials: u.trials, seed: u.seed }
    }
}

pub(super) fn cech(u: &Unit, op: &ClosureOperator) -> Verdict {
    let report = tri!(lift(cech_validate(op, scope(u))));
    let comparisons = report.families_examined as u64;
    match report.failure() {
        Some(check) => fail(
            format!("{:?} fails for {}", check.axiom, op.provenance()),
            check.witness.first().copied(),
            comparisons,
        ),
        None => pass(comparisons),
    }
}

fn eval_e(u: &Unit) -> Verdict {
    cech(u, &tri!(modification(u)))
}

fn downward_directed(f: SetFamily) -> bool {
    f.iter().all(|a| f.iter().all(|b| f.iter().any(|c| c.is_subset_of(a.intersection(b)))))
}

fn upward_directed(f: SetFamily) -> bool {
    f.iter().all(|a| f.iter().all(|b| f.iter().any(|c| a.union(b).is_subset_of(c))))
}

fn eval_g(u: &Unit) -> Verdict {
    let families = u.families();
    let hs = u.space.hyperspace();
    let tau = tri!(lift(make_topology(&u.space, &TopologySpec::Tau(u.ideal))));
    let mut comparisons = 0;
    let mut notes = Vec::new();
    let members: Vec<Subset> = u.ideal.members().iter().collect();
    let trace = |a: Subset, f: SetFamily, rel: fn(Subset, Subset, Subset) -> bool| {
        members.iter().all(|&s| f.iter().any(|b| rel(a, b, s)))
    };
    for &f in &families {
        let closure = cl_tau(hs, &u.ideal, f);
        comparisons += 2;
        if tau.closure(f) != closure || cl_tau_all_members(hs, &u.ideal, f) != closure {
            return fail("tau topology closure, maximal-member and all-member closures disagree", Some(f), comparisons);
        }
        if !u.exhaustive() {
            continue;
        }
        let down: fn(Subset, Subset, Subset) -> bool = |a, b, s| a.intersection(s).is_subset_of(b);
        let up_literal: fn(Subset, Subset, Subset) -> bool = |a, b, s| b.is_subset_of(a.intersection(s));
        let up_traced: fn(Subset, Subset, Subset) -> bool = |a, b, s| b.intersection(s).is_subset_of(a);
        let down_closed = f.is_down_closed();
        let up_closed = f.is_up_closed(hs);
        let down_directed = downward_directed(f);
        let up_directed = upward_directed(f);
        for a in hs.subsets() {
            let inside = closure.contains(a);
            if down_closed {
                comparisons += 1;
                if trace(a, f, down) != inside {
                    return fail(
                        format!("down-closed form fails at {}", u.space.format_subset(a)),
                        Some(f),
                        comparisons,
                    );
                }
            }
            if up_closed {
                comparisons += 1;
                if trace(a, f, up_traced) != inside {
                    return fail(format!("up-closed form fails at {}", u.space.format_subset(a)), Some(f), comparisons);
                }
            }
            if down_directed && trace(a, f, down) != inside {
                notes.push("downward-directed literal form refuted");
            }
            if up_directed && trace(a, f, up_literal) != inside {
                notes.push("upward-directed literal form refuted");
            }
        }
    }
    notes.sort_unstable();
    notes.dedup();
    Verdict::Pass { branch: None, comparisons, notes }
}

fn eval_j(u: &Unit) -> Verdict {
    let families = u.families();
    let (op, t) = match u.variant.as_str() {
        "born-lower" | "born-upper" => {
            let (side, spec) = if u.variant == "born-lower" {
                (Side::Lower, TopologySpec::MetricLower)
            } else {
                (Side::Upper, TopologySpec::MetricUpper)
            };
            let t: HyperTopology = tri!(lift(make_topology(&u.space, &spec)));
            (ClosureOperator::bornological(&u.space, &u.ideal, side), t)
        }
        _ => (tri!(modification(u)), u.topology().clone()),
    };
    let t_op = t.closure_operator();
    let tau = ClosureOperator::tau(&u.space, &u.ideal);
    for &f in &families {
        let hull = idempotent_hull(&op, f).family;
        let meet = tri!(lift(meet_closure(&t_op, &tau, f)));
        if hull != meet {
            return fail(
                format!("hull {} versus meet closure {}", u.space.format_family(hull), u.space.format_family(meet)),
                Some(f),
                families.len() as u64,
            );
        }
    }
    pass(families.len() as u64)
}

struct Bracket {
    family: SetFamily,
    /// Uniform expansions of `family`, one per small scale.
    expansions: Vec<SetFamily>,
}

fn expansion(hs: bornlab::Hyperspace, e: &Enlargement, family: SetFamily) -> SetFamily {
    hs.subsets().filter(|&b| family.iter().any(|c| b.is_subset_of(e.apply(c)) && c.is_subset_of(e.apply(b)))).collect()
}

/// Brackets `[S', S^ε]` with `ε` drawn from `scales`.
fn brackets(u: &Unit, scales: &[Enlargement]) -> Vec<Bracket> {
    let hs = u.space.hyperspace();
    let small = u.space.scales().small();
    let mut out: Vec<Bracket> = Vec::new();
    for lower in u.ideal.members().iter() {
        for s in u.ideal.members().iter() {
            for e in scales {
                let bracket = BracketFamily::new(lower, e.apply(s));
                let family = bracket.family(hs);
                if family.is_empty() || out.iter().any(|b| b.family == family) {
                    continue;
                }
                let expansions = small.iter().map(|d| expansion(hs, d, family)).collect();
                out.push(Bracket { family, expansions });
            }
        }
    }
    out
}

fn uniformly_open(g: SetFamily, brackets: &[Bracket]) -> bool {
    g.iter().all(|a| brackets.iter().any(|b| b.family.contains(a) && b.expansions.iter().any(|x| x.is_subfamily_of(g))))
}

fn eval_u(u: &Unit) -> Verdict {
    let hs = u.space.hyperspace();
    let op = ClosureOperator::bornological(&u.space, &u.ideal, Side::Both);
    let opens = sorted(tri!(lift(reflection_opens(&op))));
    let every = brackets(u, u.space.scales().every());
    let families = hs.families();
    let characterized: Vec<SetFamily> = families.iter().copied().filter(|&g| uniformly_open(g, &every)).collect();
    let verdict = compare_opens(&u.space, &opens, &sorted(characterized), "a uniform neighbourhood of brackets");
    let small = brackets(u, u.space.scales().small());
    let small_reading: Vec<SetFamily> = families.iter().copied().filter(|&g| uniformly_open(g, &small)).collect();
    let note =
        if sorted(small_reading) == opens { "small-epsilon reading matches" } else { "small-epsilon reading differs" };
    match verdict {
        Verdict::Pass { branch, comparisons, mut notes } => {
            notes.push(note);
            Verdict::Pass { branch, comparisons, notes }
        }
        Verdict::Fail { detail, family, comparisons } => {
            Verdict::Fail { detail: format!("{detail} ({note})"), family, comparisons }
        }
    }
}

fn eval_v(u: &Unit) -> Verdict {
    let families = u.families();
    let op = ClosureOperator::bornological(&u.space, &u.ideal, Side::Both);
    let hull: Vec<SetFamily> = families.iter().map(|&f| idempotent_hull(&op, f).family).collect();
    let plus = tri!(lift(plus_ideal(&u.space, &u.ideal)));
    let mut comparisons = families.len() as u64;
    let mut matched = false;
    for other in Ideal::all(u.space.hyperspace()) {
        comparisons += families.len() as u64;
        if table(&ClosureOperator::bornological(&u.space, &other, Side::Both), &families) == hull {
            matched = true;
            if other != plus {
                return fail(
                    format!(
                        "{} reproduces the reflection but differs from the plus ideal {}",
                        other.describe(&u.space),
                        plus.describe(&u.space)
                    ),
                    None,
                    comparisons,
                );
            }
        }
    }
    Verdict::Pass { branch: Some(matched), comparisons, notes: Vec::new() }
}
