use bornlab::*;
use num::{BigInt, One, Zero};
use proptest::prelude::*;

/// Shortest-path closure of random integer edge weights: always a
/// pseudometric, with zero weights giving nontrivial zero-classes.
fn space_strategy(max_points: usize) -> impl Strategy<Value = FiniteSpace> {
    (1..=max_points).prop_flat_map(|n| {
        proptest::collection::vec(0i64..4, n * n).prop_map(move |w| {
            let mut d = vec![vec![0i64; n]; n];
            for i in 0..n {
                for j in 0..n {
                    if i != j {
                        d[i][j] = w[i.min(j) * n + i.max(j)];
                    }
                }
            }
            for k in 0..n {
                for i in 0..n {
                    for j in 0..n {
                        d[i][j] = d[i][j].min(d[i][k] + d[k][j]);
                    }
                }
            }
            FiniteSpace::from_integer_matrix(&d).unwrap()
        })
    })
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

fn ideal_of(space: &FiniteSpace, bits: u8) -> Ideal {
    Ideal::principal(Subset::from_bits(bits).intersection(space.ground()))
}

fn family_of(space: &FiniteSpace, bits: u64) -> SetFamily {
    SetFamily::from_bits(bits).intersection(space.hyperspace().full())
}

fn sub(a: &Extended, b: &Extended, c: &Extended) -> bool {
    match (a, b, c) {
        (_, Extended::Infinity, _) | (_, _, Extended::Infinity) => true,
        (Extended::Infinity, _, _) => false,
        (Extended::Finite(x), Extended::Finite(y), Extended::Finite(z)) => x <= &(y + z),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn enlargement_is_monotone(space in space_strategy(5), bits in any::<u8>(), k1 in 1i64..64, k2 in 1i64..64) {
        let a = Subset::from_bits(bits).intersection(space.ground());
        let (lo, hi) = (k1.min(k2), k1.max(k2));
        let small = enlarge(&space, a, &q(lo, 8)).unwrap();
        let large = enlarge(&space, a, &q(hi, 8)).unwrap();
        prop_assert!(small.is_subset_of(large));
        prop_assert!(a.is_subset_of(small));
    }

    #[test]
    fn enlargement_is_constant_on_bands(space in space_strategy(4)) {
        let bands = critical_bands(&space);
        let mut edges = vec![Rational::zero()];
        edges.extend(bands.thresholds().iter().cloned());
        for window in edges.windows(2) {
            let (lo, hi) = (&window[0], &window[1]);
            let first = lo + (hi - lo) * q(1, 3);
            for s in space.hyperspace().subsets() {
                prop_assert_eq!(enlarge(&space, s, &first).unwrap(), enlarge(&space, s, hi).unwrap());
            }
        }
        let top = edges.last().unwrap().clone();
        for s in space.hyperspace().subsets() {
            let beyond = enlarge(&space, s, &(top.clone() + Rational::one())).unwrap();
            prop_assert_eq!(beyond, enlarge(&space, s, &(top.clone() + q(1, 7))).unwrap());
            let sat = enlarge(&space, s, &bands.sub_minimal()).unwrap();
            let zero: Subset = Subset::from_indices((0..space.len()).filter(|&x| {
                matches!(space.point_to_set(x, s), Extended::Finite(ref d) if d.is_zero())
            }));
            prop_assert_eq!(sat, zero);
        }
    }

    #[test]
    fn hausdorff_is_an_extended_pseudometric(space in space_strategy(4)) {
        let subsets: Vec<Subset> = space.hyperspace().subsets().collect();
        for &a in &subsets {
            prop_assert_eq!(hausdorff(&space, a, a), Extended::Finite(Rational::zero()));
            for &b in &subsets {
                let ab = hausdorff(&space, a, b);
                prop_assert_eq!(&ab, &hausdorff(&space, b, a));
                for &c in &subsets {
                    prop_assert!(sub(&hausdorff(&space, a, c), &ab, &hausdorff(&space, b, c)));
                }
            }
        }
    }

    #[test]
    fn tb_hull_is_a_closure_on_ideals(space in space_strategy(4), b1 in any::<u8>(), b2 in any::<u8>()) {
        let s = ideal_of(&space, b1);
        let t = ideal_of(&space, b1 | b2);
        let tb = tb_hull(&space, &s).unwrap();
        prop_assert!(s.is_subideal_of(&tb));
        prop_assert_eq!(tb_hull(&space, &tb).unwrap(), tb);
        prop_assert!(tb.is_subideal_of(&tb_hull(&space, &t).unwrap()));
    }

    #[test]
    fn plus_and_hat_are_contractive_and_monotone(space in space_strategy(4), b1 in any::<u8>(), b2 in any::<u8>()) {
        let s = ideal_of(&space, b1 & b2);
        let t = ideal_of(&space, b1);
        for op in [plus_ideal, hat_ideal] {
            let (os, ot) = (op(&space, &s).unwrap(), op(&space, &t).unwrap());
            prop_assert!(os.is_subideal_of(&s));
            prop_assert!(os.is_subideal_of(&ot));
        }
    }

    #[test]
    fn star_is_the_largest_hat_stable_sub_ideal(space in space_strategy(3), bits in any::<u8>()) {
        let s = ideal_of(&space, bits);
        let star = star_ideal(&space, &s).unwrap();
        prop_assert_eq!(hat_ideal(&space, &star.ideal).unwrap(), star.ideal);
        prop_assert!(star.iterations <= s.len());
        for sub in s.sub_ideals() {
            if hat_ideal(&space, &sub).unwrap() == sub {
                prop_assert!(sub.is_subideal_of(&star.ideal));
            }
        }
    }

    #[test]
    fn plus_is_stable_under_small_enlargements(space in space_strategy(4), bits in any::<u8>()) {
        let s = ideal_of(&space, bits);
        prop_assert!(stable_under_small_enlargements(&space, plus_ideal(&space, &s).unwrap().members()));
    }

    #[test]
    fn generated_ideals_are_ideals(space in space_strategy(4), bits in any::<u64>()) {
        let gens = family_of(&space, bits);
        let i = generate_ideal(&space, gens);
        prop_assert!(gens.is_subfamily_of(i.members()));
        prop_assert!(Ideal::new(space.hyperspace(), i.members()).is_ok());
    }

    #[test]
    fn born_closures_are_cech_on_samples(space in space_strategy(4), bits in any::<u8>(), seed in any::<u64>()) {
        let s = ideal_of(&space, bits);
        for side in [Side::Lower, Side::Upper, Side::Both] {
            let op = ClosureOperator::bornological(&space, &s, side);
            let report = cech_validate(&op, Scope::Sampled { trials: 20, seed }).unwrap();
            prop_assert!(report.all_passed(), "{:?}", report.failure());
        }
    }

    #[test]
    fn maximal_members_suffice(space in space_strategy(3), bits in any::<u8>(), fam in any::<u64>()) {
        let s = ideal_of(&space, bits);
        let f = family_of(&space, fam);
        for side in [Side::Lower, Side::Upper, Side::Both] {
            prop_assert_eq!(cl_born(&space, &s, side, f), cl_born_all_members(&space, &s, side, f));
        }
        prop_assert_eq!(cl_tau(space.hyperspace(), &s, f), cl_tau_all_members(space.hyperspace(), &s, f));
    }

    #[test]
    fn instance_round_trip(space in space_strategy(5)) {
        let text = save_space(&space, None);
        prop_assert_eq!(load_space(&text).unwrap(), space);
    }
}
