//! Finite pseudometric spaces with exact rational distances.
//!
//! A [`FiniteSpace`] is the ground set `X`. Its subsets are bitmasks
//! ([`Subset`]) and the hyperspace of all subsets is indexed by those same
//! bitmasks, which is what lets a whole family of subsets live in one `u64`.
//!
//! Every statement about "all ε > 0" or "some ε > 0" is decided over a finite
//! list of enlargement maps held in [`Scales`]: on a finite space the map
//! `A ↦ A^ε` only changes when ε crosses one of the distances occurring in the
//! matrix, so one representative per band is enough.

use std::cmp::Ordering;
use std::fmt;

use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};

use crate::family::SetFamily;

/// Exact rational used for distances and radii.
pub type Rational = BigRational;

/// Largest ground set supported: the hyperspace must fit the 64 bits of a
/// [`SetFamily`].
pub const MAX_POINTS: usize = 6;

/// Denominator of the dense grid used to cross-check band decisions.
pub const DEFAULT_GRID_DENOMINATOR: u32 = 64;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SpaceError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("metric axiom `{axiom}` violated at indices {witness:?}")]
    MetricAxiom { axiom: MetricAxiom, witness: Vec<usize> },
    #[error("radius must be positive, got {0}")]
    Domain(String),
    #[error("unknown point label `{0}`")]
    UnknownLabel(String),
    #[error("a space needs between 1 and {MAX_POINTS} points, got {0}")]
    PointCount(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MetricAxiom {
    Shape,
    NonNegative,
    ZeroDiagonal,
    Symmetry,
    Triangle,
    DistinctLabels,
}

impl fmt::Display for MetricAxiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MetricAxiom::Shape => "shape",
            MetricAxiom::NonNegative => "non-negativity",
            MetricAxiom::ZeroDiagonal => "zero diagonal",
            MetricAxiom::Symmetry => "symmetry",
            MetricAxiom::Triangle => "triangle",
            MetricAxiom::DistinctLabels => "distinct labels",
        })
    }
}

/// A subset of the ground set, as a bitmask over point indices.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subset(u8);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub const fn from_bits(bits: u8) -> Self {
        Subset(bits)
    }

    pub const fn bits(self) -> u8 {
        self.0
    }

    pub fn from_indices(indices: impl IntoIterator<Item = usize>) -> Self {
        indices.into_iter().fold(Subset::EMPTY, |s, i| s.with(i))
    }

    pub fn singleton(index: usize) -> Self {
        Subset(1 << index)
    }

    pub fn with(self, index: usize) -> Self {
        debug_assert!(index < MAX_POINTS);
        Subset(self.0 | (1 << index))
    }

    pub fn contains(self, index: usize) -> bool {
        index < 8 && self.0 & (1 << index) != 0
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    pub fn difference(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn meets(self, other: Subset) -> bool {
        self.0 & other.0 != 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn indices(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..8).filter(move |i| bits & (1 << i) != 0)
    }

    /// All subsets of `self`, starting with the empty set.
    pub fn subsets(self) -> impl Iterator<Item = Subset> {
        let set = self.0;
        let mut next = Some(0u8);
        std::iter::from_fn(move || {
            let current = next?;
            let following = current.wrapping_sub(set) & set;
            next = (following != 0).then_some(following);
            Some(Subset(current))
        })
    }

    /// Order used for printing: by size, then lexicographically by indices.
    pub fn canonical_cmp(&self, other: &Subset) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.indices().cmp(other.indices()))
    }
}

/// The hyperspace of a ground set with `points` elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Hyperspace {
    points: usize,
}

impl Hyperspace {
    pub fn new(points: usize) -> Self {
        assert!(points <= MAX_POINTS, "at most {MAX_POINTS} points");
        Hyperspace { points }
    }

    pub fn points(self) -> usize {
        self.points
    }

    /// Number of subsets of the ground set.
    pub fn size(self) -> usize {
        1 << self.points
    }

    pub fn ground(self) -> Subset {
        Subset(((1u16 << self.points) - 1) as u8)
    }

    pub fn subsets(self) -> impl Iterator<Item = Subset> {
        (0..self.size()).map(|b| Subset(b as u8))
    }

    /// The family of all subsets.
    pub fn full(self) -> SetFamily {
        if self.size() == 64 {
            SetFamily::from_bits(u64::MAX)
        } else {
            SetFamily::from_bits((1u64 << self.size()) - 1)
        }
    }

    pub fn complement(self, family: SetFamily) -> SetFamily {
        self.full().difference(family)
    }

    /// Number of families, when it fits in a `u64`.
    pub fn family_count(self) -> Option<u64> {
        (self.size() < 64).then(|| 1u64 << self.size())
    }

    /// Every family of subsets, ordered by member count and then by bits.
    ///
    /// Panics when the hyperspace has more than 16 points.
    pub fn families(self) -> Vec<SetFamily> {
        assert!(self.size() <= 16, "exhaustive family scans need |X| <= 4");
        let mut all: Vec<SetFamily> = (0..(1u64 << self.size())).map(SetFamily::from_bits).collect();
        all.sort_by_key(|f| (f.len(), f.bits()));
        all
    }
}

/// Non-negative rational extended with `+∞`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Extended {
    Finite(Rational),
    Infinity,
}

impl fmt::Display for Extended {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Extended::Finite(r) => write!(f, "{}", format_rational(r)),
            Extended::Infinity => f.write_str("inf"),
        }
    }
}

/// The map `A ↦ A^ε` at one fixed radius, stored as one ball per point.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Enlargement {
    reach: Vec<Subset>,
}

impl Enlargement {
    fn at(dist: &[Vec<Rational>], radius: &Rational) -> Self {
        let reach = dist
            .iter()
            .map(|row| Subset::from_indices(row.iter().enumerate().filter(|(_, d)| *d < radius).map(|(j, _)| j)))
            .collect();
        Enlargement { reach }
    }

    /// `{x | d(x, A) < ε}`; the empty set stays empty.
    pub fn apply(&self, a: Subset) -> Subset {
        a.indices().fold(Subset::EMPTY, |acc, i| acc.union(self.reach[i]))
    }

    /// Points strictly within the radius of `index`.
    pub fn ball(&self, index: usize) -> Subset {
        self.reach[index]
    }
}

/// Sorted distinct positive distances of a space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalBands {
    thresholds: Vec<Rational>,
}

impl CriticalBands {
    pub fn thresholds(&self) -> &[Rational] {
        &self.thresholds
    }

    /// A radius inside `(0, t₁]`, where every enlargement is the zero-distance
    /// saturation.
    pub fn sub_minimal(&self) -> Rational {
        self.thresholds.first().cloned().unwrap_or_else(Rational::one)
    }

    /// One radius per band: `t₁, …, t_k` stand for `(0,t₁], …, (t_{k−1},t_k]`
    /// and `t_k + 1` for everything above the largest distance.
    pub fn representatives(&self) -> Vec<Rational> {
        match self.thresholds.last() {
            None => vec![Rational::one()],
            Some(last) => {
                let mut reps = self.thresholds.clone();
                reps.push(last + Rational::one());
                reps
            }
        }
    }
}

/// How ε-quantifiers are evaluated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScaleMode {
    /// One radius per critical band.
    Bands,
    /// Every radius `k/q` up to one past the largest distance.
    Grid { denominator: u32 },
}

/// The enlargement maps an ε-quantifier ranges over.
///
/// `small` stands in for "arbitrarily small ε" and is only valid for
/// statements that are monotone in ε; `every` covers every band and is used
/// where no monotonicity is available. In grid mode both lists are the full
/// grid, so grid evaluation never relies on monotonicity.
#[derive(Clone, Debug)]
pub struct Scales {
    mode: ScaleMode,
    small: Vec<Enlargement>,
    every: Vec<Enlargement>,
}

impl Scales {
    fn bands(dist: &[Vec<Rational>]) -> Self {
        let bands = bands_of(dist);
        let every: Vec<Enlargement> = bands.representatives().iter().map(|r| Enlargement::at(dist, r)).collect();
        let small = vec![Enlargement::at(dist, &bands.sub_minimal())];
        Scales { mode: ScaleMode::Bands, small, every }
    }

    fn grid(dist: &[Vec<Rational>], denominator: u32) -> Self {
        let bands = bands_of(dist);
        let top = bands.thresholds.last().cloned().unwrap_or_else(Rational::zero) + Rational::one();
        let q = BigInt::from(denominator);
        let steps = (&top * Rational::from_integer(q.clone())).ceil().to_integer();
        let steps = steps.to_u64().expect("grid too large");
        let mut every: Vec<Enlargement> = Vec::new();
        for k in 1..=steps {
            let radius = Rational::new(BigInt::from(k), q.clone());
            let map = Enlargement::at(dist, &radius);
            if !every.contains(&map) {
                every.push(map);
            }
        }
        Scales { mode: ScaleMode::Grid { denominator }, small: every.clone(), every }
    }

    pub fn mode(&self) -> ScaleMode {
        self.mode
    }

    pub fn small(&self) -> &[Enlargement] {
        &self.small
    }

    pub fn every(&self) -> &[Enlargement] {
        &self.every
    }

    /// `∀ε>0 P(ε)` for a `P` that only gets harder as ε shrinks.
    pub fn for_all_small(&self, p: impl FnMut(&Enlargement) -> bool) -> bool {
        self.small.iter().all(p)
    }

    /// `∃ε>0 P(ε)` for a `P` that only gets easier as ε shrinks.
    pub fn exists_small(&self, p: impl FnMut(&Enlargement) -> bool) -> bool {
        self.small.iter().any(p)
    }

    /// `∃ε>0 P(ε)` with no monotonicity assumption.
    pub fn exists(&self, p: impl FnMut(&Enlargement) -> bool) -> bool {
        self.every.iter().any(p)
    }

    /// The saturation map `A ↦ {x | d(x,A) = 0}` in band mode; in grid mode
    /// the smallest grid radius.
    pub fn finest(&self) -> &Enlargement {
        &self.small[0]
    }
}

fn bands_of(dist: &[Vec<Rational>]) -> CriticalBands {
    let mut thresholds: Vec<Rational> = dist.iter().flatten().filter(|d| d.is_positive()).cloned().collect();
    thresholds.sort();
    thresholds.dedup();
    CriticalBands { thresholds }
}

/// A finite pseudometric space.
#[derive(Clone, Debug)]
pub struct FiniteSpace {
    labels: Vec<String>,
    dist: Vec<Vec<Rational>>,
    scales: Scales,
}

impl PartialEq for FiniteSpace {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.dist == other.dist
    }
}

impl Eq for FiniteSpace {}

impl FiniteSpace {
    /// Validates the pseudometric axioms. Zero distances between distinct
    /// points are allowed.
    pub fn new(labels: Vec<String>, dist: Vec<Vec<Rational>>) -> Result<Self, SpaceError> {
        let n = labels.len();
        if n == 0 || n > MAX_POINTS {
            return Err(SpaceError::PointCount(n));
        }
        for i in 0..n {
            for j in 0..i {
                if labels[i] == labels[j] {
                    return Err(axiom(MetricAxiom::DistinctLabels, vec![j, i]));
                }
            }
        }
        if dist.len() != n {
            return Err(axiom(MetricAxiom::Shape, vec![dist.len()]));
        }
        if let Some(i) = dist.iter().position(|row| row.len() != n) {
            return Err(axiom(MetricAxiom::Shape, vec![i]));
        }
        for (i, row) in dist.iter().enumerate() {
            if let Some(j) = row.iter().position(|d| d.is_negative()) {
                return Err(axiom(MetricAxiom::NonNegative, vec![i, j]));
            }
        }
        if let Some(i) = (0..n).find(|&i| !dist[i][i].is_zero()) {
            return Err(axiom(MetricAxiom::ZeroDiagonal, vec![i]));
        }
        for (i, row) in dist.iter().enumerate() {
            for (j, d) in row.iter().enumerate().skip(i + 1) {
                if *d != dist[j][i] {
                    return Err(axiom(MetricAxiom::Symmetry, vec![i, j]));
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if dist[i][k] > &dist[i][j] + &dist[j][k] {
                        return Err(axiom(MetricAxiom::Triangle, vec![i, j, k]));
                    }
                }
            }
        }
        let scales = Scales::bands(&dist);
        Ok(FiniteSpace { labels, dist, scales })
    }

    /// Points on a line at the given integer positions, labelled `a, b, c, …`.
    pub fn on_line(positions: &[i64]) -> Result<Self, SpaceError> {
        let labels = default_labels(positions.len());
        let dist = positions
            .iter()
            .map(|p| positions.iter().map(|q| Rational::from_integer(BigInt::from((p - q).abs()))).collect())
            .collect();
        FiniteSpace::new(labels, dist)
    }

    /// Integer distance matrix with default labels.
    pub fn from_integer_matrix(matrix: &[Vec<i64>]) -> Result<Self, SpaceError> {
        let dist =
            matrix.iter().map(|row| row.iter().map(|&d| Rational::from_integer(BigInt::from(d))).collect()).collect();
        FiniteSpace::new(default_labels(matrix.len()), dist)
    }

    /// The same space with ε-quantifiers evaluated in another mode.
    pub fn with_scale_mode(&self, mode: ScaleMode) -> FiniteSpace {
        let scales = match mode {
            ScaleMode::Bands => Scales::bands(&self.dist),
            ScaleMode::Grid { denominator } => Scales::grid(&self.dist, denominator),
        };
        FiniteSpace { scales, ..self.clone() }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn distance(&self, i: usize, j: usize) -> &Rational {
        &self.dist[i][j]
    }

    pub fn matrix(&self) -> &[Vec<Rational>] {
        &self.dist
    }

    pub fn hyperspace(&self) -> Hyperspace {
        Hyperspace::new(self.len())
    }

    pub fn ground(&self) -> Subset {
        self.hyperspace().ground()
    }

    pub fn scales(&self) -> &Scales {
        &self.scales
    }

    /// True when distinct points are at positive distance.
    pub fn is_metric(&self) -> bool {
        (0..self.len()).all(|i| (0..self.len()).all(|j| i == j || self.dist[i][j].is_positive()))
    }

    pub fn index_of(&self, label: &str) -> Result<usize, SpaceError> {
        self.labels.iter().position(|l| l == label).ok_or_else(|| SpaceError::UnknownLabel(label.to_string()))
    }

    pub fn subset<S: AsRef<str>>(&self, labels: &[S]) -> Result<Subset, SpaceError> {
        labels.iter().try_fold(Subset::EMPTY, |s, l| Ok(s.with(self.index_of(l.as_ref())?)))
    }

    pub fn subset_labels(&self, s: Subset) -> Vec<String> {
        s.indices().map(|i| self.labels[i].clone()).collect()
    }

    /// Members of a family as label lists, in canonical order.
    pub fn family_labels(&self, family: SetFamily) -> Vec<Vec<String>> {
        let mut members: Vec<Subset> = family.iter().collect();
        members.sort_by(Subset::canonical_cmp);
        members.into_iter().map(|s| self.subset_labels(s)).collect()
    }

    pub fn format_subset(&self, s: Subset) -> String {
        format!("{{{}}}", self.subset_labels(s).join(","))
    }

    pub fn format_family(&self, family: SetFamily) -> String {
        let mut members: Vec<Subset> = family.iter().collect();
        members.sort_by(Subset::canonical_cmp);
        let parts: Vec<String> = members.into_iter().map(|s| self.format_subset(s)).collect();
        format!("{{{}}}", parts.join(", "))
    }

    /// `d(x, A)`, with `d(x, ∅) = +∞`.
    pub fn point_to_set(&self, x: usize, a: Subset) -> Extended {
        a.indices().map(|i| self.dist[x][i].clone()).min().map_or(Extended::Infinity, Extended::Finite)
    }
}

fn axiom(axiom: MetricAxiom, witness: Vec<usize>) -> SpaceError {
    SpaceError::MetricAxiom { axiom, witness }
}

pub fn default_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect()
}

/// `A^ε = {x | d(x, A) < ε}`.
pub fn enlarge(space: &FiniteSpace, a: Subset, eps: &Rational) -> Result<Subset, SpaceError> {
    if !eps.is_positive() {
        return Err(SpaceError::Domain(format_rational(eps)));
    }
    Ok(Enlargement::at(&space.dist, eps).apply(a))
}

/// Hausdorff distance: the larger of the two directed point-set distances.
/// It is `+∞` when exactly one argument is empty and `0` when both are.
pub fn hausdorff(space: &FiniteSpace, a: Subset, b: Subset) -> Extended {
    let directed = |from: Subset, to: Subset| {
        from.indices().map(|x| space.point_to_set(x, to)).max().unwrap_or(Extended::Finite(Rational::zero()))
    };
    directed(a, b).max(directed(b, a))
}

pub fn critical_bands(space: &FiniteSpace) -> CriticalBands {
    bands_of(&space.dist)
}

/// Parses `"p/q"`, an integer, or a finite decimal such as `"1.25"`.
pub fn parse_rational(text: &str) -> Result<Rational, SpaceError> {
    let text = text.trim();
    let bad = || SpaceError::Parse(format!("not a rational: `{text}`"));
    if let Some((p, q)) = text.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| bad())?;
        let q: BigInt = q.trim().parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(bad());
        }
        return Ok(Rational::new(p, q));
    }
    if let Some((whole, frac)) = text.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = whole.starts_with('-');
        let whole: BigInt =
            if whole.is_empty() || whole == "-" { BigInt::zero() } else { whole.parse().map_err(|_| bad())? };
        let scale = num::pow(BigInt::from(10), frac.len());
        let frac: BigInt = frac.parse().map_err(|_| bad())?;
        let magnitude = whole.abs() * &scale + frac;
        let numer = if negative { -magnitude } else { magnitude };
        return Ok(Rational::new(numer, scale));
    }
    let p: BigInt = text.parse().map_err(|_| bad())?;
    Ok(Rational::from_integer(p))
}

/// Canonical text form: `"p"` for integers, `"p/q"` otherwise.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    fn w() -> FiniteSpace {
        FiniteSpace::on_line(&[0, 1, 3, 7]).unwrap()
    }

    fn zero_pair() -> FiniteSpace {
        FiniteSpace::from_integer_matrix(&[vec![0, 0], vec![0, 0]]).unwrap()
    }

    #[test]
    fn line_space_is_a_metric() {
        let w = w();
        assert_eq!(w.len(), 4);
        assert!(w.is_metric());
        assert_eq!(w.distance(1, 3), &q(6, 1));
    }

    #[test]
    fn asymmetric_matrix_is_rejected() {
        let err = FiniteSpace::from_integer_matrix(&[vec![0, 1], vec![2, 0]]).unwrap_err();
        assert_eq!(err, axiom(MetricAxiom::Symmetry, vec![0, 1]));
    }

    #[test]
    fn triangle_violation_names_a_witness() {
        let m = [vec![0, 1, 5], vec![1, 0, 1], vec![5, 1, 0]];
        let err = FiniteSpace::from_integer_matrix(&m).unwrap_err();
        let SpaceError::MetricAxiom { axiom, witness } = err else { panic!() };
        assert_eq!(axiom, MetricAxiom::Triangle);
        // brute force: the reported triple really violates the inequality
        let (i, j, k) = (witness[0], witness[1], witness[2]);
        assert!(m[i][k] > m[i][j] + m[j][k]);
        assert_eq!(witness, vec![0, 1, 2]);
    }

    #[test]
    fn pseudometric_zero_distance_is_allowed() {
        let z = zero_pair();
        assert!(!z.is_metric());
    }

    #[test]
    fn enlarge_examples() {
        let w = w();
        let a = w.subset(&["a"]).unwrap();
        assert_eq!(enlarge(&w, a, &q(3, 2)).unwrap(), w.subset(&["a", "b"]).unwrap());
        assert_eq!(enlarge(&w, Subset::EMPTY, &q(1, 1)).unwrap(), Subset::EMPTY);
        assert_eq!(enlarge(&w, w.ground(), &q(1, 1000)).unwrap(), w.ground());
        // strict inequality: distance exactly 1 is not within radius 1
        assert_eq!(enlarge(&w, a, &q(1, 1)).unwrap(), a);
        assert!(matches!(enlarge(&w, a, &q(0, 1)), Err(SpaceError::Domain(_))));
        assert!(matches!(enlarge(&w, a, &q(-1, 2)), Err(SpaceError::Domain(_))));
    }

    #[test]
    fn hausdorff_examples() {
        let w = w();
        let a = w.subset(&["a"]).unwrap();
        let b = w.subset(&["b"]).unwrap();
        assert_eq!(hausdorff(&w, a, b), Extended::Finite(q(1, 1)));
        for s in w.hyperspace().subsets() {
            assert_eq!(hausdorff(&w, s, s), Extended::Finite(q(0, 1)));
        }
        assert_eq!(hausdorff(&w, Subset::EMPTY, a), Extended::Infinity);
        assert_eq!(hausdorff(&w, a, w.subset(&["c", "d"]).unwrap()), Extended::Finite(q(7, 1)));
    }

    #[test]
    fn critical_band_examples() {
        let w = w();
        let expected: Vec<Rational> = [1, 2, 3, 4, 6, 7].iter().map(|&n| q(n, 1)).collect();
        assert_eq!(critical_bands(&w).thresholds(), &expected[..]);
        let one = FiniteSpace::on_line(&[5]).unwrap();
        assert!(critical_bands(&one).thresholds().is_empty());
        assert!(critical_bands(&zero_pair()).thresholds().is_empty());
    }

    #[test]
    fn subset_enumeration_visits_every_subset_once() {
        let s = Subset::from_bits(0b1011);
        let all: Vec<u8> = s.subsets().map(Subset::bits).collect();
        assert_eq!(all, vec![0, 1, 2, 3, 8, 9, 10, 11]);
        assert_eq!(Subset::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn rational_text_forms() {
        assert_eq!(parse_rational("3/6").unwrap(), q(1, 2));
        assert_eq!(parse_rational("1.25").unwrap(), q(5, 4));
        assert_eq!(parse_rational("-0.5").unwrap(), q(-1, 2));
        assert_eq!(parse_rational("7").unwrap(), q(7, 1));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("1.").is_err());
        assert_eq!(format_rational(&q(6, 4)), "3/2");
        assert_eq!(format_rational(&q(4, 2)), "2");
    }

    #[test]
    fn grid_scales_collapse_to_the_band_maps() {
        let w = w();
        let grid = w.with_scale_mode(ScaleMode::Grid { denominator: DEFAULT_GRID_DENOMINATOR });
        // one distinct map per band: below 1, (1,2], (2,3], (3,4], (4,6], (6,7], above 7
        assert_eq!(grid.scales().every().len(), 7);
        assert_eq!(w.scales().every(), grid.scales().every());
        assert_eq!(w.scales().finest(), grid.scales().finest());
    }
}
