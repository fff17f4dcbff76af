mod common;

use common::{big, poly};
use ivpoly::arith::PrimePower;
use ivpoly::lattice::{
    canonical_generators, lattice_contains, semantic_component_membership, semantic_membership,
    truncated_lattice, VerifyMode,
};
use ivpoly::IntPoly;
use num_bigint::BigInt;
use num_integer::Integer;
use proptest::prelude::*;

fn pp_strategy() -> impl Strategy<Value = PrimePower> {
    prop::sample::select(vec![(2u64, 1u32), (2, 3), (2, 5), (3, 2), (3, 4), (5, 2), (7, 2)])
        .prop_map(|(p, n)| PrimePower::new(p, n).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn residue_partition(pp in pp_strategy(), f in poly(10, 200)) {
        let all = (0..pp.p()).all(|j| semantic_component_membership(&f, &pp, j).unwrap());
        prop_assert_eq!(semantic_membership(&f, &pp), all);
    }

    #[test]
    fn periodicity(pp in pp_strategy(), f in poly(10, 1000), i in -5000i64..5000) {
        let m = pp.modulus();
        let a = f.eval(&big(i)).mod_floor(m);
        let b = f.eval(&(big(i) + m)).mod_floor(m);
        prop_assert_eq!(a, b);
    }

    #[test]
    fn hnf_ignores_input_order(
        gens in prop::collection::vec(poly(4, 30), 1..5).prop_filter("some nonzero", |g| g.iter().any(|f| !f.is_zero())),
        seed in any::<u64>(),
    ) {
        let d = 6;
        let forward = truncated_lattice(gens.iter(), d).unwrap();
        let mut shuffled = gens.clone();
        let len = shuffled.len();
        for i in 0..len {
            shuffled.swap(i, (seed as usize).wrapping_add(i * 7) % len);
        }
        shuffled.reverse();
        prop_assert_eq!(truncated_lattice(shuffled.iter(), d).unwrap(), forward.clone());
        prop_assert_eq!(truncated_lattice(gens.iter(), d).unwrap(), forward);
    }

    #[test]
    fn lattice_contains_combinations(
        gens in prop::collection::vec(poly(3, 30), 1..4).prop_filter("some nonzero", |g| g.iter().any(|f| !f.is_zero())),
        coeffs in prop::collection::vec(-25i64..25, 8),
    ) {
        let l = truncated_lattice(gens.iter(), 7).unwrap();
        let combo = l.basis().iter().zip(coeffs.iter()).fold(IntPoly::zero(), |acc, (b, c)| acc + b.scale(&big(*c)));
        prop_assert!(lattice_contains(&l, &combo).unwrap());
        // Shifted generator multiples are in the lattice as well.
        for g in gens.iter().filter(|g| !g.is_zero()) {
            if g.degree().unwrap() + 2 <= 7 {
                prop_assert!(lattice_contains(&l, &g.shift_up(2)).unwrap());
            }
        }
    }
}

#[test]
fn full_mode_canonical_set_is_the_product_expansion() {
    // (mbar + 1)^p products before removing duplicates.
    let pp = PrimePower::new(5, 5).unwrap();
    let gens = canonical_generators(&pp, VerifyMode::Full).unwrap();
    assert!(gens.len() > 1000 && gens.len() <= 7776, "{}", gens.len());
    assert_eq!(gens.max_degree(), 25);
    let pp = PrimePower::new(2, 1).unwrap();
    let gens = canonical_generators(&pp, VerifyMode::Full).unwrap();
    let expected: Vec<IntPoly> = vec![
        IntPoly::from_i64s(&[4]),
        IntPoly::from_i64s(&[-2, 2]),
        IntPoly::from_i64s(&[0, 2]),
        IntPoly::from_i64s(&[0, -1, 1]),
    ];
    let mut got: Vec<IntPoly> = gens.polys().cloned().collect();
    got.sort_by_key(|g| g.coeffs().iter().map(BigInt::to_string).collect::<Vec<_>>().join(","));
    let mut want = expected;
    want.sort_by_key(|g| g.coeffs().iter().map(BigInt::to_string).collect::<Vec<_>>().join(","));
    assert_eq!(got, want);
}
