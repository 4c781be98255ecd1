//! Topologies on the hyperspace of a finite space.
//!
//! Every topology on a finite set is determined by its minimal
//! neighbourhoods `U_A`, the intersection of all opens containing `A`. A
//! [`HyperTopology`] stores those alongside the subbase it was built from.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::closure::{idempotent_hull, ClosureOperator, Provenance, Side};
use crate::family::{Ideal, SetFamily};
use crate::space::{FiniteSpace, Hyperspace, Subset};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TopologyError {
    #[error("invalid topology spec: {0}")]
    InvalidSpec(String),
    #[error("closed-set table is not a topology: {0}")]
    NonIdempotentTable(String),
    #[error("closure is not topological: the neighbourhood relation is not transitive at {family:?}")]
    NotTopological { family: SetFamily },
    #[error("open-set enumeration needs a hyperspace of at most 16 points, got {0}")]
    TooLarge(usize),
}

/// Structural classification of a hyperspace topology.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Directedness {
    /// Every open family is closed upwards.
    Lower,
    /// Every open family is closed downwards.
    Upper,
    /// Both; only the indiscrete topology qualifies.
    BothIndiscrete,
    Neither,
}

impl fmt::Display for Directedness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Directedness::Lower => "lower",
            Directedness::Upper => "upper",
            Directedness::BothIndiscrete => "both-indiscrete",
            Directedness::Neither => "neither",
        })
    }
}

/// How to build a topology; see [`make_topology`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TopologySpec {
    MetricLower,
    MetricUpper,
    MetricBoth,
    Tau(Ideal),
    /// Base `{↓G}` for the listed `G`, plus the whole hyperspace.
    Miss(Vec<Subset>),
    /// Closed families; must be a lattice containing `∅` and the full family.
    Table(Vec<SetFamily>),
    /// Arbitrary families declared open.
    Subbase(Vec<SetFamily>),
}

#[derive(Clone, Debug)]
pub struct HyperTopology {
    name: String,
    hyperspace: Hyperspace,
    subbase: Vec<SetFamily>,
    min_nbhd: Vec<SetFamily>,
    directedness: Directedness,
    miss: bool,
}

impl PartialEq for HyperTopology {
    fn eq(&self, other: &Self) -> bool {
        self.hyperspace == other.hyperspace && self.min_nbhd == other.min_nbhd
    }
}

impl Eq for HyperTopology {}

impl HyperTopology {
    fn from_neighbourhoods(
        name: String,
        hyperspace: Hyperspace,
        subbase: Vec<SetFamily>,
        min_nbhd: Vec<SetFamily>,
    ) -> Self {
        let up = hyperspace.subsets().all(|a| min_nbhd[a.bits() as usize].is_up_closed(hyperspace));
        let down = min_nbhd.iter().all(|u| u.is_down_closed());
        let directedness = match (up, down) {
            (true, true) => Directedness::BothIndiscrete,
            (true, false) => Directedness::Lower,
            (false, true) => Directedness::Upper,
            (false, false) => Directedness::Neither,
        };
        let miss = down
            && min_nbhd.iter().all(|u| {
                let top = u.union_of_members();
                *u == top.subsets().collect::<SetFamily>()
            });
        HyperTopology { name, hyperspace, subbase, min_nbhd, directedness, miss }
    }

    /// The topology generated by `subbase`.
    pub fn from_subbase(name: impl Into<String>, hyperspace: Hyperspace, subbase: Vec<SetFamily>) -> Self {
        let min_nbhd = hyperspace
            .subsets()
            .map(|a| subbase.iter().filter(|g| g.contains(a)).fold(hyperspace.full(), |acc, &g| acc.intersection(g)))
            .collect();
        HyperTopology::from_neighbourhoods(name.into(), hyperspace, subbase, min_nbhd)
    }

    /// Reads the topology off a topological closure operator. Fails when the
    /// operator is not idempotent.
    pub fn from_closure(name: impl Into<String>, op: &ClosureOperator) -> Result<Self, TopologyError> {
        let hyperspace = op.hyperspace();
        let images: Vec<SetFamily> = hyperspace.subsets().map(|b| op.apply(SetFamily::singleton(b))).collect();
        let min_nbhd: Vec<SetFamily> = hyperspace
            .subsets()
            .map(|a| hyperspace.subsets().filter(|b| images[b.bits() as usize].contains(a)).collect())
            .collect();
        for a in hyperspace.subsets() {
            let u = min_nbhd[a.bits() as usize];
            if !u.contains(a) || u.iter().any(|b| !min_nbhd[b.bits() as usize].is_subfamily_of(u)) {
                return Err(TopologyError::NotTopological { family: hyperspace.complement(u) });
            }
        }
        Ok(HyperTopology::from_neighbourhoods(name.into(), hyperspace, min_nbhd.clone(), min_nbhd))
    }

    /// The topological reflection: opens are the `op`-open families and the
    /// closure is the idempotent hull.
    pub fn reflection_of(op: &ClosureOperator) -> Self {
        let hyperspace = op.hyperspace();
        let hulls: Vec<SetFamily> =
            hyperspace.subsets().map(|b| idempotent_hull(op, SetFamily::singleton(b)).family).collect();
        let min_nbhd: Vec<SetFamily> = hyperspace
            .subsets()
            .map(|a| hyperspace.subsets().filter(|b| hulls[b.bits() as usize].contains(a)).collect())
            .collect();
        let name = format!("reflection of {}", op.provenance());
        HyperTopology::from_neighbourhoods(name, hyperspace, min_nbhd.clone(), min_nbhd)
    }

    pub fn discrete(hyperspace: Hyperspace) -> Self {
        let subbase: Vec<SetFamily> = hyperspace.subsets().map(SetFamily::singleton).collect();
        HyperTopology::from_subbase("discrete", hyperspace, subbase)
    }

    pub fn indiscrete(hyperspace: Hyperspace) -> Self {
        HyperTopology::from_subbase("indiscrete", hyperspace, Vec::new())
    }

    /// Finest topology coarser than both.
    pub fn meet(&self, other: &HyperTopology) -> Self {
        let hyperspace = self.hyperspace;
        let min_nbhd: Vec<SetFamily> = hyperspace
            .subsets()
            .map(|a| {
                let mut u = SetFamily::singleton(a);
                loop {
                    let next = u
                        .iter()
                        .fold(u, |acc, b| acc.union(self.min_neighbourhood(b)).union(other.min_neighbourhood(b)));
                    if next == u {
                        return u;
                    }
                    u = next;
                }
            })
            .collect();
        let name = format!("{} meet {}", self.name, other.name);
        HyperTopology::from_neighbourhoods(name, hyperspace, min_nbhd.clone(), min_nbhd)
    }

    /// Coarsest topology finer than both.
    pub fn join(&self, other: &HyperTopology) -> Self {
        let mut subbase = self.subbase.clone();
        subbase.extend(other.subbase.iter().copied());
        let mut joined =
            HyperTopology::from_subbase(format!("{} join {}", self.name, other.name), self.hyperspace, subbase);
        debug_assert!(
            joined
                .hyperspace
                .subsets()
                .all(|a| joined.min_neighbourhood(a)
                    == self.min_neighbourhood(a).intersection(other.min_neighbourhood(a)))
        );
        joined.name = format!("{} join {}", self.name, other.name);
        joined
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn hyperspace(&self) -> Hyperspace {
        self.hyperspace
    }

    pub fn subbase(&self) -> &[SetFamily] {
        &self.subbase
    }

    /// Minimal neighbourhoods as a subbase; describes the same topology.
    pub fn neighbourhood_subbase(&self) -> Vec<SetFamily> {
        self.min_nbhd.clone()
    }

    /// Smallest open family containing `a`.
    pub fn min_neighbourhood(&self, a: Subset) -> SetFamily {
        self.min_nbhd[a.bits() as usize]
    }

    /// `{A | U_A ∩ 𝒜 ≠ ∅}`.
    pub fn closure(&self, family: SetFamily) -> SetFamily {
        self.hyperspace.subsets().filter(|&a| self.min_neighbourhood(a).meets(family)).collect()
    }

    pub fn closure_operator(&self) -> ClosureOperator {
        let topology = self.clone();
        ClosureOperator::new(self.hyperspace, Provenance::Topology { name: self.name.clone() }, move |f| {
            topology.closure(f)
        })
    }

    pub fn is_open(&self, family: SetFamily) -> bool {
        family.iter().all(|a| self.min_neighbourhood(a).is_subfamily_of(family))
    }

    pub fn is_closed(&self, family: SetFamily) -> bool {
        self.is_open(self.hyperspace.complement(family))
    }

    /// `V` is a neighbourhood of `A`.
    pub fn is_neighbourhood(&self, v: SetFamily, a: Subset) -> bool {
        self.min_neighbourhood(a).is_subfamily_of(v)
    }

    /// Every open family, in (member count, bits) order.
    pub fn opens(&self) -> Result<Vec<SetFamily>, TopologyError> {
        if self.hyperspace.size() > 16 {
            return Err(TopologyError::TooLarge(self.hyperspace.size()));
        }
        Ok(self.hyperspace.families().into_iter().filter(|&g| self.is_open(g)).collect())
    }

    /// Every open of `self` is open in `other`.
    pub fn is_coarser_than(&self, other: &HyperTopology) -> bool {
        self.hyperspace.subsets().all(|a| other.is_open(self.min_neighbourhood(a)))
    }

    pub fn directedness(&self) -> Directedness {
        self.directedness
    }

    pub fn is_lower(&self) -> bool {
        matches!(self.directedness, Directedness::Lower | Directedness::BothIndiscrete)
    }

    pub fn is_upper(&self) -> bool {
        matches!(self.directedness, Directedness::Upper | Directedness::BothIndiscrete)
    }

    /// Upper, with a base of principal down-sets `↓G`.
    pub fn is_miss(&self) -> bool {
        self.miss
    }
}

impl fmt::Display for HyperTopology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

pub fn directedness_check(topology: &HyperTopology) -> Directedness {
    topology.directedness()
}

/// `[lower, excluded] = {C | lower ⊆ C, C ∩ excluded = ∅}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BracketFamily {
    pub lower: Subset,
    pub excluded: Subset,
}

impl BracketFamily {
    pub fn new(lower: Subset, excluded: Subset) -> Self {
        BracketFamily { lower, excluded }
    }

    pub fn contains(&self, c: Subset) -> bool {
        self.lower.is_subset_of(c) && !c.meets(self.excluded)
    }

    pub fn is_empty(&self) -> bool {
        self.lower.meets(self.excluded)
    }

    pub fn family(&self, hyperspace: Hyperspace) -> SetFamily {
        hyperspace.subsets().filter(|&c| self.contains(c)).collect()
    }
}

/// `{A | A ∩ s ≠ ∅}`.
pub fn hit_family(hyperspace: Hyperspace, s: Subset) -> SetFamily {
    hyperspace.subsets().filter(|a| a.meets(s)).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Up,
    Down,
}

/// `↑𝒜` or `↓𝒜`.
pub fn updown(hyperspace: Hyperspace, family: SetFamily, direction: Direction) -> SetFamily {
    hyperspace
        .subsets()
        .filter(|&b| {
            family.iter().any(|a| match direction {
                Direction::Up => a.is_subset_of(b),
                Direction::Down => b.is_subset_of(a),
            })
        })
        .collect()
}

fn metric_topology(space: &FiniteSpace, side: Side) -> HyperTopology {
    let hyperspace = space.hyperspace();
    let scales = space.scales();
    let min_nbhd: Vec<SetFamily> = hyperspace
        .subsets()
        .map(|a| {
            hyperspace
                .subsets()
                .filter(|&b| {
                    scales.for_all_small(|e| match side {
                        Side::Lower => a.is_subset_of(e.apply(b)),
                        Side::Upper => b.is_subset_of(e.apply(a)),
                        Side::Both => a.is_subset_of(e.apply(b)) && b.is_subset_of(e.apply(a)),
                    })
                })
                .collect()
        })
        .collect();
    let name = match side {
        Side::Lower => "H-",
        Side::Upper => "H+",
        Side::Both => "H",
    };
    HyperTopology::from_neighbourhoods(name.to_string(), hyperspace, min_nbhd.clone(), min_nbhd)
}

fn validate_table(hyperspace: Hyperspace, closed: &[SetFamily]) -> Result<(), TopologyError> {
    if hyperspace.size() > 16 {
        return Err(TopologyError::InvalidSpec(format!(
            "closed-set tables need a hyperspace of at most 16 points, got {}",
            hyperspace.size()
        )));
    }
    if let Some(f) = closed.iter().find(|f| !f.is_subfamily_of(hyperspace.full())) {
        return Err(TopologyError::InvalidSpec(format!("family {f:?} is outside the hyperspace")));
    }
    if !closed.contains(&SetFamily::EMPTY) {
        return Err(TopologyError::NonIdempotentTable("the empty family is missing".into()));
    }
    if !closed.contains(&hyperspace.full()) {
        return Err(TopologyError::NonIdempotentTable("the full family is missing".into()));
    }
    for &f in closed {
        for &g in closed {
            if !closed.contains(&f.union(g)) {
                return Err(TopologyError::NonIdempotentTable(format!("not closed under union: {f:?}, {g:?}")));
            }
            if !closed.contains(&f.intersection(g)) {
                return Err(TopologyError::NonIdempotentTable(format!("not closed under intersection: {f:?}, {g:?}")));
            }
        }
    }
    Ok(())
}

/// Builds and classifies a topology from a spec.
pub fn make_topology(space: &FiniteSpace, spec: &TopologySpec) -> Result<HyperTopology, TopologyError> {
    let hyperspace = space.hyperspace();
    match spec {
        TopologySpec::MetricLower => Ok(metric_topology(space, Side::Lower)),
        TopologySpec::MetricUpper => Ok(metric_topology(space, Side::Upper)),
        TopologySpec::MetricBoth => Ok(metric_topology(space, Side::Both)),
        TopologySpec::Tau(ideal) => {
            if !ideal.members().is_subfamily_of(hyperspace.full()) {
                return Err(TopologyError::InvalidSpec("ideal is outside the hyperspace".into()));
            }
            let members: Vec<Subset> = ideal.members().iter().collect();
            let mut subbase: Vec<SetFamily> = Vec::new();
            for &s in &members {
                for &t in &members {
                    let bracket = BracketFamily::new(s, t);
                    if !bracket.is_empty() {
                        let family = bracket.family(hyperspace);
                        if !subbase.contains(&family) {
                            subbase.push(family);
                        }
                    }
                }
            }
            Ok(HyperTopology::from_subbase(format!("tau({})", ideal.describe(space)), hyperspace, subbase))
        }
        TopologySpec::Miss(generators) => {
            if let Some(g) = generators.iter().find(|g| !g.is_subset_of(space.ground())) {
                return Err(TopologyError::InvalidSpec(format!("{} is not a subset of the space", g.bits())));
            }
            let mut subbase: Vec<SetFamily> = generators.iter().map(|g| g.subsets().collect()).collect();
            subbase.push(hyperspace.full());
            let names: Vec<String> = generators.iter().map(|&g| space.format_subset(g)).collect();
            Ok(HyperTopology::from_subbase(format!("miss[{}]", names.join(",")), hyperspace, subbase))
        }
        TopologySpec::Table(closed) => {
            validate_table(hyperspace, closed)?;
            let subbase = closed.iter().map(|&f| hyperspace.complement(f)).collect();
            Ok(HyperTopology::from_subbase("table", hyperspace, subbase))
        }
        TopologySpec::Subbase(opens) => {
            if opens.iter().any(|f| !f.is_subfamily_of(hyperspace.full())) {
                return Err(TopologyError::InvalidSpec("subbase family is outside the hyperspace".into()));
            }
            Ok(HyperTopology::from_subbase("subbase", hyperspace, opens.clone()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closure::{cl_metric, cl_tau, is_topological, Scope};
    use crate::family::generate_ideal;

    fn w() -> FiniteSpace {
        FiniteSpace::on_line(&[0, 1, 3, 7]).unwrap()
    }

    fn line3() -> FiniteSpace {
        FiniteSpace::on_line(&[0, 1, 3]).unwrap()
    }

    /// Opens by brute force: unions of finite intersections of the subbase.
    fn generated_opens(hs: Hyperspace, subbase: &[SetFamily]) -> Vec<SetFamily> {
        let mut base = vec![hs.full()];
        loop {
            let mut grown = base.clone();
            for &b in &base {
                for &s in subbase {
                    let i = b.intersection(s);
                    if !grown.contains(&i) {
                        grown.push(i);
                    }
                }
            }
            if grown.len() == base.len() {
                break;
            }
            base = grown;
        }
        let mut opens = vec![SetFamily::EMPTY];
        loop {
            let mut grown = opens.clone();
            for &o in &opens {
                for &b in &base {
                    let u = o.union(b);
                    if !grown.contains(&u) {
                        grown.push(u);
                    }
                }
            }
            if grown.len() == opens.len() {
                break;
            }
            opens = grown;
        }
        opens.sort_by_key(|f| (f.len(), f.bits()));
        opens
    }

    fn scan_directedness(opens: &[SetFamily], hs: Hyperspace) -> Directedness {
        let up = opens.iter().all(|g| g.is_up_closed(hs));
        let down = opens.iter().all(|g| g.is_down_closed());
        match (up, down) {
            (true, true) => Directedness::BothIndiscrete,
            (true, false) => Directedness::Lower,
            (false, true) => Directedness::Upper,
            (false, false) => Directedness::Neither,
        }
    }

    #[test]
    fn tau_extremes() {
        let s = line3();
        let hs = s.hyperspace();
        let discrete = make_topology(&s, &TopologySpec::Tau(Ideal::power_set(hs))).unwrap();
        assert_eq!(discrete, HyperTopology::discrete(hs));
        let indiscrete = make_topology(&s, &TopologySpec::Tau(Ideal::trivial())).unwrap();
        assert_eq!(indiscrete, HyperTopology::indiscrete(hs));
        assert_eq!(indiscrete.directedness(), Directedness::BothIndiscrete);
    }

    #[test]
    fn miss_on_two_points() {
        let s = FiniteSpace::on_line(&[0, 1]).unwrap();
        let hs = s.hyperspace();
        let t = make_topology(&s, &TopologySpec::Miss(vec![s.ground()])).unwrap();
        assert_eq!(t.opens().unwrap(), vec![SetFamily::EMPTY, hs.full()]);
        let t = make_topology(&s, &TopologySpec::Miss(vec![s.subset(&["a"]).unwrap()])).unwrap();
        let down_a = SetFamily::from_bits(0b0011);
        assert_eq!(t.opens().unwrap(), vec![SetFamily::EMPTY, down_a, hs.full()]);
        assert!(t.is_miss());
        assert_eq!(t.directedness(), Directedness::Upper);
    }

    #[test]
    fn tau_closure_matches_cl_tau() {
        let s = line3();
        let hs = s.hyperspace();
        for i in Ideal::all(hs) {
            let t = make_topology(&s, &TopologySpec::Tau(i)).unwrap();
            for f in hs.families() {
                assert_eq!(t.closure(f), cl_tau(hs, &i, f));
            }
        }
    }

    #[test]
    fn metric_topologies_match_cl_metric() {
        for s in [line3(), FiniteSpace::from_integer_matrix(&[vec![0, 0, 1], vec![0, 0, 1], vec![1, 1, 0]]).unwrap()] {
            let hs = s.hyperspace();
            for (spec, side) in [
                (TopologySpec::MetricLower, Side::Lower),
                (TopologySpec::MetricUpper, Side::Upper),
                (TopologySpec::MetricBoth, Side::Both),
            ] {
                let t = make_topology(&s, &spec).unwrap();
                for f in hs.families() {
                    assert_eq!(t.closure(f), cl_metric(&s, side, f));
                }
                assert!(is_topological(&t.closure_operator(), Scope::Exhaustive).unwrap().topological);
            }
        }
    }

    #[test]
    fn directedness_agrees_with_open_scan() {
        let s = line3();
        let hs = s.hyperspace();
        let lower = make_topology(&s, &TopologySpec::MetricLower).unwrap();
        let upper = make_topology(&s, &TopologySpec::MetricUpper).unwrap();
        assert_eq!(directedness_check(&lower), Directedness::Lower);
        assert_eq!(directedness_check(&upper), Directedness::Upper);
        assert_eq!(directedness_check(&HyperTopology::indiscrete(hs)), Directedness::BothIndiscrete);
        assert_eq!(directedness_check(&HyperTopology::discrete(hs)), Directedness::Neither);
        let mut topologies = vec![lower, upper, make_topology(&s, &TopologySpec::MetricBoth).unwrap()];
        for i in Ideal::all(hs) {
            topologies.push(make_topology(&s, &TopologySpec::Tau(i)).unwrap());
        }
        for t in &topologies {
            let opens = generated_opens(hs, t.subbase());
            assert_eq!(t.opens().unwrap(), opens, "{}", t.name());
            assert_eq!(t.directedness(), scan_directedness(&opens, hs), "{}", t.name());
        }
    }

    #[test]
    fn metric_both_is_join() {
        let s = line3();
        let hs = s.hyperspace();
        let lower = make_topology(&s, &TopologySpec::MetricLower).unwrap();
        let upper = make_topology(&s, &TopologySpec::MetricUpper).unwrap();
        let both = make_topology(&s, &TopologySpec::MetricBoth).unwrap();
        let mut subbase = lower.opens().unwrap();
        subbase.extend(upper.opens().unwrap());
        assert_eq!(both.opens().unwrap(), generated_opens(hs, &subbase));
        assert_eq!(lower.join(&upper), both);
    }

    #[test]
    fn meet_opens_are_common_opens() {
        let s = line3();
        let hs = s.hyperspace();
        let lower = make_topology(&s, &TopologySpec::MetricLower).unwrap();
        let tau = make_topology(&s, &TopologySpec::Tau(Ideal::principal(s.subset(&["a", "b"]).unwrap()))).unwrap();
        let meet = lower.meet(&tau);
        let common: Vec<SetFamily> =
            hs.families().into_iter().filter(|&g| lower.is_open(g) && tau.is_open(g)).collect();
        assert_eq!(meet.opens().unwrap(), common);
        assert!(meet.is_coarser_than(&lower) && meet.is_coarser_than(&tau));
    }

    #[test]
    fn from_closure_round_trips() {
        let s = line3();
        let t = make_topology(&s, &TopologySpec::MetricUpper).unwrap();
        assert_eq!(HyperTopology::from_closure("copy", &t.closure_operator()).unwrap(), t);
        let born = ClosureOperator::bornological(&s, &Ideal::power_set(s.hyperspace()), Side::Lower);
        let r = HyperTopology::reflection_of(&born);
        assert_eq!(r, make_topology(&s, &TopologySpec::MetricLower).unwrap());
    }

    #[test]
    fn table_validation() {
        let s = FiniteSpace::on_line(&[0, 1]).unwrap();
        let hs = s.hyperspace();
        let ok =
            make_topology(&s, &TopologySpec::Table(vec![SetFamily::EMPTY, SetFamily::from_bits(0b0001), hs.full()]))
                .unwrap();
        assert!(ok.is_closed(SetFamily::from_bits(0b0001)));
        let missing = make_topology(&s, &TopologySpec::Table(vec![SetFamily::EMPTY, SetFamily::from_bits(0b0001)]));
        assert!(matches!(missing, Err(TopologyError::NonIdempotentTable(_))));
        let not_lattice = TopologySpec::Table(vec![
            SetFamily::EMPTY,
            SetFamily::from_bits(0b0001),
            SetFamily::from_bits(0b0010),
            hs.full(),
        ]);
        assert!(matches!(make_topology(&s, &not_lattice), Err(TopologyError::NonIdempotentTable(_))));
        let big = FiniteSpace::on_line(&[0, 1, 2, 3, 4]).unwrap();
        assert!(matches!(make_topology(&big, &TopologySpec::Table(vec![])), Err(TopologyError::InvalidSpec(_))));
    }

    #[test]
    fn hit_and_updown() {
        let w = w();
        let hs = w.hyperspace();
        assert_eq!(hit_family(hs, Subset::EMPTY), SetFamily::EMPTY);
        assert_eq!(hit_family(hs, w.ground()), hs.full().without(Subset::EMPTY));
        assert_eq!(hit_family(hs, w.subset(&["a", "b"]).unwrap()).len(), 12);
        let empty = SetFamily::singleton(Subset::EMPTY);
        assert_eq!(updown(hs, empty, Direction::Up), hs.full());
        assert_eq!(updown(hs, empty, Direction::Down), empty);
        let ad: SetFamily = [w.subset(&["a"]).unwrap(), w.subset(&["d"]).unwrap()].into_iter().collect();
        let expected: SetFamily = hs.subsets().filter(|s| s.contains(0) || s.contains(3)).collect();
        assert_eq!(updown(hs, ad, Direction::Up), expected);
    }

    #[test]
    fn brackets() {
        let w = w();
        let a = w.subset(&["a"]).unwrap();
        let ab = w.subset(&["a", "b"]).unwrap();
        assert!(BracketFamily::new(a, ab).is_empty());
        assert!(BracketFamily::new(a, ab).family(w.hyperspace()).is_empty());
        let b = BracketFamily::new(a, w.subset(&["b"]).unwrap());
        assert_eq!(b.family(w.hyperspace()).len(), 4);
    }

    #[test]
    fn generated_ideal_tau_is_lower_when_not_trivial_only_on_brackets() {
        let w = w();
        let i = generate_ideal(&w, SetFamily::singleton(w.subset(&["a"]).unwrap()));
        let t = make_topology(&w, &TopologySpec::Tau(i)).unwrap();
        assert_eq!(t.directedness(), Directedness::Neither);
    }
}
