//! Instance pools: spaces, their ideals and the hyperspace topologies that
//! the generic-topology checks range over.

use bornlab::{make_topology, updown, Direction, FiniteSpace, HyperTopology, Ideal, SetFamily, Subset, TopologySpec};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Fixed seed used when none is given.
pub const DEFAULT_SEED: u64 = 7;
/// Random family pairs per sampled instance.
pub const DEFAULT_TRIALS: usize = 200;
/// Seeded four-point spaces in the standard pool.
pub const RANDOM_FOUR_POINT_SPACES: usize = 50;
const RANDOM_FIVE_POINT_SPACES: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PoolError {
    #[error("max-points must be between 1 and 5, got {0}")]
    MaxPoints(usize),
    #[error("trials must be at least 1")]
    Trials,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PoolPolicy {
    ExhaustiveSmall,
    Random,
}

/// One space with everything the checks quantify over.
#[derive(Clone, Debug)]
pub struct PoolSpace {
    pub name: String,
    pub space: FiniteSpace,
    pub policy: PoolPolicy,
    pub seed: u64,
    pub ideals: Vec<Ideal>,
    pub lower: Vec<HyperTopology>,
    pub upper: Vec<HyperTopology>,
}

fn push_unique(list: &mut Vec<HyperTopology>, t: HyperTopology) {
    if !list.contains(&t) {
        list.push(t);
    }
}

impl PoolSpace {
    /// All ideals, with `H^-`, `H^+`, the indiscrete topology and, on small
    /// spaces, the meets with every `τ(S)`.
    pub fn new(name: impl Into<String>, space: FiniteSpace, policy: PoolPolicy, seed: u64) -> Self {
        let hs = space.hyperspace();
        let ideals = Ideal::all(hs);
        let h_minus = make_topology(&space, &TopologySpec::MetricLower).expect("metric topology");
        let h_plus = make_topology(&space, &TopologySpec::MetricUpper).expect("metric topology");
        let indiscrete = HyperTopology::indiscrete(hs);
        let mut lower = vec![h_minus.clone(), indiscrete.clone()];
        let mut upper = vec![h_plus.clone()];
        push_unique(&mut upper, indiscrete);
        if space.len() <= 3 {
            for ideal in &ideals {
                let tau = make_topology(&space, &TopologySpec::Tau(*ideal)).expect("tau topology");
                let label = ideal.describe(&space);
                push_unique(&mut lower, h_minus.meet(&tau).with_name(format!("H- meet tau({label})")));
                push_unique(&mut upper, h_plus.meet(&tau).with_name(format!("H+ meet tau({label})")));
            }
        }
        PoolSpace { name: name.into(), space, policy, seed, ideals, lower, upper }
    }

    pub fn exhaustive(&self) -> bool {
        self.space.len() <= 3
    }

    pub fn miss(&self) -> impl Iterator<Item = &HyperTopology> {
        self.upper.iter().filter(|t| t.is_miss())
    }

    pub fn add_lower(&mut self, t: HyperTopology) {
        assert!(t.is_lower(), "{} is not lower", t.name());
        push_unique(&mut self.lower, t);
    }

    pub fn add_upper(&mut self, t: HyperTopology) {
        assert!(t.is_upper(), "{} is not upper", t.name());
        push_unique(&mut self.upper, t);
    }

    /// Seeded lower, miss and non-miss upper topologies.
    pub fn add_random_topologies(&mut self, lower: usize, miss: usize, upper: usize) {
        let hs = self.space.hyperspace();
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        let random_subset = |rng: &mut ChaCha8Rng| Subset::from_bits(rng.gen::<u8>()).intersection(hs.ground());
        for k in 0..lower {
            let subbase: Vec<SetFamily> = (0..2)
                .map(|_| {
                    let gens: SetFamily = (0..2).map(|_| random_subset(&mut rng)).collect();
                    updown(hs, gens, Direction::Up)
                })
                .collect();
            self.add_lower(HyperTopology::from_subbase(format!("random-lower-{k}"), hs, subbase));
        }
        for k in 0..miss {
            let gens: Vec<Subset> = (0..2).map(|_| random_subset(&mut rng)).collect();
            let t = make_topology(&self.space, &TopologySpec::Miss(gens)).expect("miss topology");
            self.add_upper(t.with_name(format!("random-miss-{k}")));
        }
        for k in 0..upper {
            let gens: SetFamily = (0..2).map(|_| random_subset(&mut rng)).collect();
            let subbase = vec![updown(hs, gens, Direction::Down)];
            self.add_upper(HyperTopology::from_subbase(format!("random-upper-{k}"), hs, subbase));
        }
    }
}

#[derive(Clone, Debug)]
pub struct InstancePool {
    pub seed: u64,
    pub trials: usize,
    pub spaces: Vec<PoolSpace>,
}

pub(crate) fn splitmix(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^ (x >> 31)
}

/// Every topology on the four-point hyperspace of a two-point space, as
/// closed-set tables. There are 355 of them, one per preorder.
pub fn table_topologies(space: &FiniteSpace) -> Vec<HyperTopology> {
    let hs = space.hyperspace();
    assert_eq!(hs.size(), 4, "table pool needs a two-point space");
    let pairs: Vec<(usize, usize)> =
        (0..4).flat_map(|i| (0..4).filter(move |&j| j != i).map(move |j| (i, j))).collect();
    let mut out = Vec::new();
    for relation in 0u32..(1 << pairs.len()) {
        let mut nbhd = [0u64; 4];
        for (i, n) in nbhd.iter_mut().enumerate() {
            *n = 1 << i;
        }
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if relation >> k & 1 == 1 {
                nbhd[i] |= 1 << j;
            }
        }
        let transitive = (0..4).all(|i| (0..4).all(|j| nbhd[i] >> j & 1 == 0 || nbhd[j] & !nbhd[i] == 0));
        if !transitive {
            continue;
        }
        let closed: Vec<SetFamily> = hs
            .families()
            .into_iter()
            .filter(|&g| g.iter().all(|a| SetFamily::from_bits(nbhd[a.bits() as usize]).is_subfamily_of(g)))
            .map(|g| hs.complement(g))
            .collect();
        let t = make_topology(space, &TopologySpec::Table(closed)).expect("preorder topologies are valid tables");
        out.push(t.with_name(format!("table-{relation:03x}")));
    }
    out
}

#[allow(clippy::needless_range_loop)]
fn random_space(rng: &mut ChaCha8Rng, n: usize) -> FiniteSpace {
    let mut d = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let w = rng.gen_range(0..4);
            d[i][j] = w;
            d[j][i] = w;
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                d[i][j] = d[i][j].min(d[i][k] + d[k][j]);
            }
        }
    }
    FiniteSpace::from_integer_matrix(&d).expect("shortest paths form a pseudometric")
}

impl InstancePool {
    pub fn empty(seed: u64) -> Self {
        InstancePool { seed, trials: DEFAULT_TRIALS, spaces: Vec::new() }
    }

    /// Exhaustive spaces up to three points, the table pool on two points and
    /// seeded random spaces with four (and five) points.
    pub fn standard(seed: u64, max_points: usize, trials: usize) -> Result<Self, PoolError> {
        if !(1..=5).contains(&max_points) {
            return Err(PoolError::MaxPoints(max_points));
        }
        if trials == 0 {
            return Err(PoolError::Trials);
        }
        let mut pool = InstancePool { seed, trials, spaces: Vec::new() };
        let small: [(&str, Vec<Vec<i64>>); 8] = [
            ("point", vec![vec![0]]),
            ("pair", vec![vec![0, 1], vec![1, 0]]),
            ("pair-zero", vec![vec![0, 0], vec![0, 0]]),
            ("line-0-1-3", vec![vec![0, 1, 3], vec![1, 0, 2], vec![3, 2, 0]]),
            ("equilateral", vec![vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]),
            ("pseudo-0-0-1", vec![vec![0, 0, 1], vec![0, 0, 1], vec![1, 1, 0]]),
            ("zero-3", vec![vec![0, 0, 0], vec![0, 0, 0], vec![0, 0, 0]]),
            ("line-0-1-2", vec![vec![0, 1, 2], vec![1, 0, 1], vec![2, 1, 0]]),
        ];
        for (name, matrix) in small {
            if matrix.len() > max_points {
                continue;
            }
            let index = pool.spaces.len() as u64;
            let space = FiniteSpace::from_integer_matrix(&matrix).expect("bundled spaces are valid");
            let mut ps = PoolSpace::new(name, space, PoolPolicy::ExhaustiveSmall, splitmix(seed ^ index));
            match ps.space.len() {
                2 => {
                    for t in table_topologies(&ps.space) {
                        match t.directedness() {
                            bornlab::Directedness::Lower => ps.add_lower(t),
                            bornlab::Directedness::Upper => ps.add_upper(t),
                            _ => {}
                        }
                    }
                }
                3 => ps.add_random_topologies(3, 3, 2),
                _ => {}
            }
            pool.spaces.push(ps);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for (n, count) in [(4, RANDOM_FOUR_POINT_SPACES), (5, RANDOM_FIVE_POINT_SPACES)] {
            if n > max_points {
                continue;
            }
            for k in 0..count {
                let index = pool.spaces.len() as u64;
                let space = random_space(&mut rng, n);
                let mut ps =
                    PoolSpace::new(format!("random-{n}-{k:02}"), space, PoolPolicy::Random, splitmix(seed ^ index));
                ps.add_random_topologies(0, 1, 0);
                pool.spaces.push(ps);
            }
        }
        Ok(pool)
    }

    pub fn from_spaces(seed: u64, trials: usize, spaces: Vec<PoolSpace>) -> Self {
        InstancePool { seed, trials, spaces }
    }

    /// The sub-pool of spaces satisfying `keep`.
    pub fn filtered(&self, keep: impl Fn(&PoolSpace) -> bool) -> Self {
        InstancePool {
            seed: self.seed,
            trials: self.trials,
            spaces: self.spaces.iter().filter(|s| keep(s)).cloned().collect(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.spaces.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use bornlab::Hyperspace;

    #[test]
    fn table_pool_has_every_topology() {
        let pair = FiniteSpace::on_line(&[0, 1]).unwrap();
        let tables = table_topologies(&pair);
        assert_eq!(tables.len(), 355);
        for (i, a) in tables.iter().enumerate() {
            assert!(!tables[i + 1..].contains(a));
        }
        assert!(tables.contains(&HyperTopology::discrete(Hyperspace::new(2))));
    }

    #[test]
    fn pools_are_deterministic() {
        let a = InstancePool::standard(3, 4, 10).unwrap();
        let b = InstancePool::standard(3, 4, 10).unwrap();
        assert_eq!(a.spaces.len(), 8 + RANDOM_FOUR_POINT_SPACES);
        for (x, y) in a.spaces.iter().zip(&b.spaces) {
            assert_eq!(x.space, y.space);
            assert_eq!(x.lower, y.lower);
            assert_eq!(x.upper, y.upper);
        }
        assert_eq!(InstancePool::standard(3, 6, 10).unwrap_err(), PoolError::MaxPoints(6));
    }

    #[test]
    fn topology_lists_are_classified() {
        let pool = InstancePool::standard(7, 3, 10).unwrap();
        for ps in &pool.spaces {
            assert!(ps.lower.iter().all(HyperTopology::is_lower));
            assert!(ps.upper.iter().all(HyperTopology::is_upper));
            assert!(ps.ideals.iter().all(|i| Ideal::new(ps.space.hyperspace(), i.members()).is_ok()));
        }
        let pair = &pool.spaces[1];
        assert!(pair.miss().count() > 2);
        assert!(pair.upper.iter().any(|t| !t.is_miss()));
    }
}
