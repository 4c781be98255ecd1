//! Families of subsets and ideals of "bounded" sets, with the derived ideals
//! built from them (`S^tb`, `S^+`, `Ŝ`, `S^*`, `S^-`) and the predicates on
//! families used by the open-set characterizations.

use crate::space::{FiniteSpace, Hyperspace, Subset};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FamilyError {
    #[error("not an ideal: {reason}")]
    NotAnIdeal { reason: &'static str, witness: Vec<Subset> },
    #[error("family has members outside a ground set of {points} points")]
    OutOfRange { points: usize },
    #[error("family is not contained in the ambient ideal")]
    NotSubfamily { witness: Subset },
}

/// A finite family of subsets, one bit per member.
///
/// Bit `k` set means the subset with bitmask `k` belongs to the family.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetFamily(u64);

impl SetFamily {
    pub const EMPTY: SetFamily = SetFamily(0);

    pub const fn from_bits(bits: u64) -> Self {
        SetFamily(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn singleton(s: Subset) -> Self {
        SetFamily(1 << s.bits())
    }

    pub fn contains(self, s: Subset) -> bool {
        self.0 & (1 << s.bits()) != 0
    }

    pub fn with(self, s: Subset) -> Self {
        SetFamily(self.0 | (1 << s.bits()))
    }

    pub fn without(self, s: Subset) -> Self {
        SetFamily(self.0 & !(1 << s.bits()))
    }

    pub fn union(self, other: SetFamily) -> SetFamily {
        SetFamily(self.0 | other.0)
    }

    pub fn intersection(self, other: SetFamily) -> SetFamily {
        SetFamily(self.0 & other.0)
    }

    pub fn difference(self, other: SetFamily) -> SetFamily {
        SetFamily(self.0 & !other.0)
    }

    pub fn is_subfamily_of(self, other: SetFamily) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn meets(self, other: SetFamily) -> bool {
        self.0 & other.0 != 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = Subset> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let bit = rest.trailing_zeros();
            rest &= rest - 1;
            Some(Subset::from_bits(bit as u8))
        })
    }

    /// The image of the family under a map on subsets.
    pub fn map(self, f: impl Fn(Subset) -> Subset) -> SetFamily {
        self.iter().map(f).collect()
    }

    /// `𝒜|_S = {B ∩ S | B ∈ 𝒜}`.
    pub fn restrict(self, s: Subset) -> SetFamily {
        self.map(|b| b.intersection(s))
    }

    /// Union of all members.
    pub fn union_of_members(self) -> Subset {
        self.iter().fold(Subset::EMPTY, Subset::union)
    }

    /// Members not strictly contained in another member.
    pub fn maximal_members(self) -> Vec<Subset> {
        self.iter().filter(|&s| !self.iter().any(|t| t != s && s.is_subset_of(t))).collect()
    }

    /// All subfamilies, including the empty one.
    pub fn subfamilies(self) -> impl Iterator<Item = SetFamily> {
        let set = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let current = next?;
            let following = current.wrapping_sub(set) & set;
            next = (following != 0).then_some(following);
            Some(SetFamily(current))
        })
    }

    pub fn is_down_closed(self) -> bool {
        self.iter().all(|s| s.subsets().all(|t| self.contains(t)))
    }

    pub fn is_up_closed(self, hyperspace: Hyperspace) -> bool {
        let ground = hyperspace.ground();
        self.iter().all(|s| ground.difference(s).subsets().all(|t| self.contains(s.union(t))))
    }
}

impl FromIterator<Subset> for SetFamily {
    fn from_iter<I: IntoIterator<Item = Subset>>(iter: I) -> Self {
        iter.into_iter().fold(SetFamily::EMPTY, SetFamily::with)
    }
}

/// A family closed under subsets and finite unions that contains `∅`.
///
/// On a finite ground set every ideal is `↓M` for its largest member `M`, but
/// it is stored extensionally.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Ideal {
    members: SetFamily,
}

impl Ideal {
    pub fn new(hyperspace: Hyperspace, members: SetFamily) -> Result<Self, FamilyError> {
        if !members.is_subfamily_of(hyperspace.full()) {
            return Err(FamilyError::OutOfRange { points: hyperspace.points() });
        }
        if !members.contains(Subset::EMPTY) {
            return Err(FamilyError::NotAnIdeal { reason: "missing the empty set", witness: vec![] });
        }
        for s in members.iter() {
            if let Some(t) = s.subsets().find(|&t| !members.contains(t)) {
                return Err(FamilyError::NotAnIdeal { reason: "not closed under subsets", witness: vec![s, t] });
            }
            if let Some(t) = members.iter().find(|&t| !members.contains(s.union(t))) {
                return Err(FamilyError::NotAnIdeal { reason: "not closed under unions", witness: vec![s, t] });
            }
        }
        Ok(Ideal { members })
    }

    /// `↓top`.
    pub fn principal(top: Subset) -> Self {
        Ideal { members: top.subsets().collect() }
    }

    /// `{∅}`.
    pub fn trivial() -> Self {
        Ideal::principal(Subset::EMPTY)
    }

    pub fn power_set(hyperspace: Hyperspace) -> Self {
        Ideal::principal(hyperspace.ground())
    }

    /// Every ideal on the ground set, ordered by the bits of the top member.
    pub fn all(hyperspace: Hyperspace) -> Vec<Ideal> {
        hyperspace.subsets().map(Ideal::principal).collect()
    }

    pub fn members(&self) -> SetFamily {
        self.members
    }

    pub fn contains(&self, s: Subset) -> bool {
        self.members.contains(s)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The union of all members, which is itself a member.
    pub fn top(&self) -> Subset {
        self.members.union_of_members()
    }

    pub fn maximal_members(&self) -> Vec<Subset> {
        self.members.maximal_members()
    }

    /// `S(A)`: members contained in `a`.
    pub fn bounded_part(&self, a: Subset) -> SetFamily {
        self.members.intersection(a.subsets().collect())
    }

    pub fn is_subideal_of(&self, other: &Ideal) -> bool {
        self.members.is_subfamily_of(other.members)
    }

    pub fn sub_ideals(&self) -> Vec<Ideal> {
        self.top().subsets().map(Ideal::principal).collect()
    }

    /// Short name such as `down{a,b}`.
    pub fn describe(&self, space: &FiniteSpace) -> String {
        let tops: Vec<String> = self.maximal_members().into_iter().map(|s| space.format_subset(s)).collect();
        format!("down{}", tops.join("+"))
    }
}

/// Smallest ideal containing the generators: finite unions of generators,
/// then every subset of those.
pub fn generate_ideal(space: &FiniteSpace, generators: SetFamily) -> Ideal {
    let mut unions = generators.with(Subset::EMPTY);
    loop {
        let next: SetFamily =
            unions.iter().flat_map(|s| unions.iter().map(move |t| s.union(t))).collect::<SetFamily>().union(unions);
        if next == unions {
            break;
        }
        unions = next;
    }
    let members: SetFamily = unions.iter().flat_map(Subset::subsets).collect();
    Ideal::new(space.hyperspace(), members).expect("generated family is an ideal")
}

/// `S^tb = {S' | ∀ε>0 ∃S∈S: S' ⊆ S^ε}`.
///
/// `∃S: S' ⊆ S^ε` only gets harder as ε shrinks.
pub fn tb_hull(space: &FiniteSpace, ideal: &Ideal) -> Result<Ideal, FamilyError> {
    let scales = space.scales();
    let members: SetFamily = space
        .hyperspace()
        .subsets()
        .filter(|&candidate| {
            scales.for_all_small(|e| ideal.members().iter().any(|s| candidate.is_subset_of(e.apply(s))))
        })
        .collect();
    Ideal::new(space.hyperspace(), members)
}

/// `S^+ = {S ∈ S | ∃ε>0: S^ε ∈ S}`.
///
/// `S^ε` shrinks with ε and `S` is closed under subsets, so small ε is best.
pub fn plus_ideal(space: &FiniteSpace, ideal: &Ideal) -> Result<Ideal, FamilyError> {
    let scales = space.scales();
    let members: SetFamily =
        ideal.members().iter().filter(|&s| scales.exists_small(|e| ideal.contains(e.apply(s)))).collect();
    Ideal::new(space.hyperspace(), members)
}

/// `Ŝ' = {S ∈ S' | ∀ε>0 ∃δ>0 ∀A with S ⊆ A^δ ∃S_A ∈ S': S_A ⊆ A, S ⊆ S_A^ε}`.
///
/// The inner condition only gets harder as ε shrinks; shrinking δ shrinks the
/// set of `A` to check. `A` ranges over every subset, `∅` and `X` included.
pub fn hat_ideal(space: &FiniteSpace, ideal: &Ideal) -> Result<Ideal, FamilyError> {
    let scales = space.scales();
    let hyperspace = space.hyperspace();
    let members: SetFamily = ideal
        .members()
        .iter()
        .filter(|&s| {
            scales.for_all_small(|eps| {
                scales.exists_small(|delta| {
                    hyperspace
                        .subsets()
                        .filter(|&a| s.is_subset_of(delta.apply(a)))
                        .all(|a| ideal.bounded_part(a).iter().any(|s_a| s.is_subset_of(eps.apply(s_a))))
                })
            })
        })
        .collect();
    Ideal::new(hyperspace, members)
}

/// Greatest hat-stable sub-ideal, with the number of hat applications made.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StarIdeal {
    pub ideal: Ideal,
    pub iterations: usize,
}

/// Iterates [`hat_ideal`] to its fixed point. Each application either fixes
/// the ideal or removes at least one member, so this stops within `|S|` steps.
pub fn star_ideal(space: &FiniteSpace, ideal: &Ideal) -> Result<StarIdeal, FamilyError> {
    let mut current = *ideal;
    let mut iterations = 0;
    loop {
        let next = hat_ideal(space, &current)?;
        iterations += 1;
        if next == current {
            return Ok(StarIdeal { ideal: current, iterations });
        }
        current = next;
    }
}

/// `S^- = (S^tb)^*`.
pub fn minus_ideal(space: &FiniteSpace, ideal: &Ideal) -> Result<Ideal, FamilyError> {
    Ok(star_ideal(space, &tb_hull(space, ideal)?)?.ideal)
}

/// Condition (♣): every `S` in the subfamily has an ε such that each `B`
/// with `S ⊆ B^ε` contains some member of the subfamily.
///
/// Smaller ε leaves fewer `B` to check.
pub fn satisfies_club(space: &FiniteSpace, sub: SetFamily, ambient: &Ideal) -> Result<bool, FamilyError> {
    if let Some(witness) = sub.difference(ambient.members()).iter().next() {
        return Err(FamilyError::NotSubfamily { witness });
    }
    let scales = space.scales();
    let hyperspace = space.hyperspace();
    Ok(sub.iter().all(|s| {
        scales.exists_small(|e| {
            hyperspace
                .subsets()
                .filter(|&b| s.is_subset_of(e.apply(b)))
                .all(|b| sub.iter().any(|s_b| s_b.is_subset_of(b)))
        })
    }))
}

/// Every member has some ε-enlargement that is again a member.
///
/// Evaluated over every band: the family need not be closed under subsets,
/// so no single radius decides it.
pub fn stable_under_small_enlargements(space: &FiniteSpace, family: SetFamily) -> bool {
    let scales = space.scales();
    family.iter().all(|s| scales.exists(|e| family.contains(e.apply(s))))
}

/// `{X \ S | S ∈ S}`.
pub fn cobounded_family(space: &FiniteSpace, ideal: &Ideal) -> SetFamily {
    let ground = space.ground();
    ideal.members().map(|s| ground.difference(s))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w() -> FiniteSpace {
        FiniteSpace::on_line(&[0, 1, 3, 7]).unwrap()
    }

    fn zero_pair() -> FiniteSpace {
        FiniteSpace::from_integer_matrix(&[vec![0, 0], vec![0, 0]]).unwrap()
    }

    fn fam(space: &FiniteSpace, members: &[&[&str]]) -> SetFamily {
        members.iter().map(|m| space.subset(m).unwrap()).collect()
    }

    fn ideal(space: &FiniteSpace, gens: &[&[&str]]) -> Ideal {
        generate_ideal(space, fam(space, gens))
    }

    #[test]
    fn generation_examples() {
        let w = w();
        assert_eq!(ideal(&w, &[&["a"], &["b"]]).members(), fam(&w, &[&[], &["a"], &["b"], &["a", "b"]]));
        assert_eq!(generate_ideal(&w, SetFamily::EMPTY), Ideal::trivial());
        assert_eq!(generate_ideal(&w, SetFamily::singleton(w.ground())), Ideal::power_set(w.hyperspace()));
    }

    #[test]
    fn ideal_validation_rejects_bad_families() {
        let hs = Hyperspace::new(2);
        let a = Subset::singleton(0);
        let b = Subset::singleton(1);
        assert!(Ideal::new(hs, SetFamily::singleton(a)).is_err());
        let no_union = [Subset::EMPTY, a, b].into_iter().collect();
        assert!(matches!(
            Ideal::new(hs, no_union),
            Err(FamilyError::NotAnIdeal { reason: "not closed under unions", .. })
        ));
        let no_sub = [Subset::EMPTY, a.union(b)].into_iter().collect();
        assert!(matches!(
            Ideal::new(hs, no_sub),
            Err(FamilyError::NotAnIdeal { reason: "not closed under subsets", .. })
        ));
        assert!(matches!(
            Ideal::new(hs, SetFamily::singleton(Subset::from_bits(4)).with(Subset::EMPTY)),
            Err(FamilyError::OutOfRange { .. })
        ));
    }

    #[test]
    fn tb_hull_examples() {
        let w = w();
        let s = ideal(&w, &[&["a", "b"]]);
        assert_eq!(tb_hull(&w, &s).unwrap(), s);
        let z = zero_pair();
        let s = ideal(&z, &[&["a"]]);
        assert_eq!(tb_hull(&z, &s).unwrap(), Ideal::power_set(z.hyperspace()));
    }

    #[test]
    fn plus_ideal_examples() {
        let w = w();
        for s in Ideal::all(w.hyperspace()) {
            assert_eq!(plus_ideal(&w, &s).unwrap(), s);
        }
        let z = zero_pair();
        assert_eq!(plus_ideal(&z, &ideal(&z, &[&["a"]])).unwrap(), Ideal::trivial());
        let full = Ideal::power_set(z.hyperspace());
        assert_eq!(plus_ideal(&z, &full).unwrap(), full);
    }

    #[test]
    fn hat_ideal_examples() {
        let w = w();
        let full = Ideal::power_set(w.hyperspace());
        assert_eq!(hat_ideal(&w, &full).unwrap(), full);
        for s in Ideal::all(w.hyperspace()) {
            assert_eq!(hat_ideal(&w, &s).unwrap(), s);
        }
        let z = zero_pair();
        assert_eq!(hat_ideal(&z, &ideal(&z, &[&["a"]])).unwrap(), Ideal::trivial());
    }

    #[test]
    fn star_ideal_examples() {
        let w = w();
        let full = Ideal::power_set(w.hyperspace());
        assert_eq!(star_ideal(&w, &full).unwrap(), StarIdeal { ideal: full, iterations: 1 });
        let s = ideal(&w, &[&["b", "d"]]);
        assert_eq!(star_ideal(&w, &s).unwrap(), StarIdeal { ideal: s, iterations: 1 });
        let z = zero_pair();
        let star = star_ideal(&z, &ideal(&z, &[&["a"]])).unwrap();
        assert_eq!(star, StarIdeal { ideal: Ideal::trivial(), iterations: 2 });
    }

    #[test]
    fn minus_ideal_examples() {
        let w = w();
        let full = Ideal::power_set(w.hyperspace());
        assert_eq!(minus_ideal(&w, &full).unwrap(), full);
        let s = ideal(&w, &[&["a", "b"]]);
        assert_eq!(minus_ideal(&w, &s).unwrap(), s);
        let z = zero_pair();
        assert_eq!(minus_ideal(&z, &ideal(&z, &[&["a"]])).unwrap(), Ideal::power_set(z.hyperspace()));
    }

    #[test]
    fn club_examples() {
        let w = w();
        let full = Ideal::power_set(w.hyperspace());
        assert!(satisfies_club(&w, SetFamily::EMPTY, &full).unwrap());
        assert!(satisfies_club(&w, fam(&w, &[&["a"]]), &full).unwrap());
        let z = zero_pair();
        let zfull = Ideal::power_set(z.hyperspace());
        assert!(!satisfies_club(&z, fam(&z, &[&["a"]]), &zfull).unwrap());
        assert!(matches!(
            satisfies_club(&z, fam(&z, &[&["a"]]), &Ideal::trivial()),
            Err(FamilyError::NotSubfamily { .. })
        ));
    }

    #[test]
    fn stability_examples() {
        let w = w();
        assert!(stable_under_small_enlargements(&w, w.hyperspace().full()));
        for bits in 0..=u16::MAX {
            assert!(stable_under_small_enlargements(&w, SetFamily::from_bits(bits as u64)));
        }
        let z = zero_pair();
        assert!(!stable_under_small_enlargements(&z, fam(&z, &[&[], &["a"]])));
    }

    #[test]
    fn stability_uses_every_band_for_non_ideal_families() {
        // a ~ b at distance 0, c at distance 1: {a}^ε is {a,b} for small ε and X for large ε.
        let s = FiniteSpace::from_integer_matrix(&[vec![0, 0, 1], vec![0, 0, 1], vec![1, 1, 0]]).unwrap();
        assert!(stable_under_small_enlargements(&s, fam(&s, &[&["a"], &["a", "b", "c"]])));
        assert!(!stable_under_small_enlargements(&s, fam(&s, &[&["a"]])));
    }

    #[test]
    fn cobounded_examples() {
        let w = w();
        assert_eq!(cobounded_family(&w, &Ideal::trivial()), SetFamily::singleton(w.ground()));
        let full = Ideal::power_set(w.hyperspace());
        assert_eq!(cobounded_family(&w, &full), w.hyperspace().full());
        let s = ideal(&w, &[&["a", "b"]]);
        let expected = fam(&w, &[&["a", "b", "c", "d"], &["b", "c", "d"], &["a", "c", "d"], &["c", "d"]]);
        assert_eq!(cobounded_family(&w, &s), expected);
    }

    #[test]
    fn family_helpers() {
        let f: SetFamily = [Subset::from_bits(1), Subset::from_bits(3), Subset::from_bits(2)].into_iter().collect();
        assert_eq!(f.len(), 3);
        assert_eq!(f.maximal_members(), vec![Subset::from_bits(3)]);
        assert_eq!(
            f.restrict(Subset::from_bits(1)),
            [Subset::from_bits(0), Subset::from_bits(1)].into_iter().collect()
        );
        assert_eq!(f.subfamilies().count(), 8);
        assert!(!f.is_down_closed());
        assert!(f.with(Subset::EMPTY).is_down_closed());
    }
}
