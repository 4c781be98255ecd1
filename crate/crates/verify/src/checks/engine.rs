use bornlab::{
    cl_born, cl_metric, hat_ideal, make_topology, minus_ideal, plus_ideal, satisfies_club,
    stable_under_small_enlargements, star_ideal, tb_hull, ClosureOperator, FiniteSpace, Ideal, ScaleMode, SetFamily,
    Side, TopologySpec, DEFAULT_GRID_DENOMINATOR,
};

use super::lower::small;
use super::two_sided::{cech, modification};
use super::{fail, lift, pass, CheckDef, Hypothesis, Over, Unit, UnitBuilder, Verdict};
use crate::pool::PoolSpace;

pub(super) fn checks() -> Vec<CheckDef> {
    vec![
        CheckDef {
            id: "cech",
            anchor: "every constructed closure operator satisfies the Cech axioms",
            universality: false,
            hypothesis: Hypothesis::Any,
            units: cech_units,
            eval: eval_cech,
        },
        CheckDef {
            id: "qe",
            anchor: "band-based epsilon decisions agree with a dense rational grid",
            universality: false,
            hypothesis: Hypothesis::Any,
            units: |ps, trials| small(ps, trials, Over::Ideals, "grid"),
            eval: eval_qe,
        },
    ]
}

const SIDES: [(Side, &str); 3] = [(Side::Lower, "lower"), (Side::Upper, "upper"), (Side::Both, "both")];

fn cech_units(ps: &PoolSpace, trials: usize) -> Vec<Unit> {
    let mut b = UnitBuilder::new(ps, trials);
    for (_, side) in SIDES {
        b.push(Ideal::trivial(), None, None, &format!("metric-{side}"));
    }
    for (_, side) in SIDES {
        b = b.over(Over::Ideals, &format!("born-{side}"));
    }
    b.over(Over::Ideals, "tau").over(Over::Lower, "lower-mod").over(Over::Upper, "upper-mod").build()
}

fn side_of(name: &str) -> Side {
    SIDES.iter().find(|(_, n)| name.ends_with(n)).map_or(Side::Both, |(s, _)| *s)
}

fn eval_cech(u: &Unit) -> Verdict {
    let op = match u.variant.as_str() {
        "tau" => ClosureOperator::tau(&u.space, &u.ideal),
        "lower-mod" | "upper-mod" => tri!(modification(u)),
        v if v.starts_with("metric-") => ClosureOperator::metric(&u.space, side_of(v)),
        v => ClosureOperator::bornological(&u.space, &u.ideal, side_of(v)),
    };
    cech(u, &op)
}

fn grid(space: &FiniteSpace) -> FiniteSpace {
    space.with_scale_mode(ScaleMode::Grid { denominator: DEFAULT_GRID_DENOMINATOR })
}

type IdealOp = fn(&FiniteSpace, &Ideal) -> Result<Ideal, bornlab::FamilyError>;

fn eval_qe(u: &Unit) -> Verdict {
    let band = &u.space;
    let grid = grid(band);
    let hs = band.hyperspace();
    let s = &u.ideal;
    let mut comparisons = 0u64;
    let disagree = |what: String, family: Option<SetFamily>, comparisons: u64| {
        fail(format!("band and grid disagree on {what}"), family, comparisons)
    };
    let ideal_ops: [(&str, IdealOp); 5] = [
        ("tb", tb_hull),
        ("plus", plus_ideal),
        ("hat", hat_ideal),
        ("star", |sp, i| star_ideal(sp, i).map(|s| s.ideal)),
        ("minus", minus_ideal),
    ];
    for (name, op) in ideal_ops {
        comparisons += 1;
        if tri!(lift(op(band, s))) != tri!(lift(op(&grid, s))) {
            return disagree(format!("{name} of {}", s.describe(band)), None, comparisons);
        }
    }
    for sub in s.members().subfamilies() {
        comparisons += 1;
        if tri!(lift(satisfies_club(band, sub, s))) != tri!(lift(satisfies_club(&grid, sub, s))) {
            return disagree("the club condition".into(), Some(sub), comparisons);
        }
    }
    for spec in [TopologySpec::MetricLower, TopologySpec::MetricUpper, TopologySpec::MetricBoth] {
        comparisons += 1;
        if tri!(lift(make_topology(band, &spec))) != tri!(lift(make_topology(&grid, &spec))) {
            return disagree(format!("{spec:?}"), None, comparisons);
        }
    }
    for f in hs.families() {
        comparisons += 1;
        if stable_under_small_enlargements(band, f) != stable_under_small_enlargements(&grid, f) {
            return disagree("stability under small enlargements".into(), Some(f), comparisons);
        }
        for (side, name) in SIDES {
            comparisons += 2;
            if cl_metric(band, side, f) != cl_metric(&grid, side, f) {
                return disagree(format!("the {name} metric closure"), Some(f), comparisons);
            }
            if cl_born(band, s, side, f) != cl_born(&grid, s, side, f) {
                return disagree(format!("the {name} bornological closure"), Some(f), comparisons);
            }
        }
    }
    pass(comparisons)
}
