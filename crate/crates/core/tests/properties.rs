use std::collections::BTreeSet;

use proptest::prelude::*;

use zeroweight::branching::{zero_dim_gl, GLWeight};
use zeroweight::chambers::enumerate_chambers;
use zeroweight::lattice::{gamma_lattice, table_membership};
use zeroweight::multiplicity::{weight_multiplicity, weyl_dimension, MultiplicityTable};
use zeroweight::piecewise::{monomial_basis, ExactPolynomial};
use zeroweight::rational::{q, Q};
use zeroweight::{RootSystem, SimpleType};

fn ty(s: &str) -> SimpleType {
    s.parse().unwrap()
}

fn small_type() -> impl Strategy<Value = SimpleType> {
    prop::sample::select(vec!["A1", "A2", "A3", "B2", "C2", "G2", "B3", "C3"]).prop_map(ty)
}

fn z_for(rank: usize, max: i64) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(0..=max, rank)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn fundamental_coordinates_round_trip(t in small_type(), seed in prop::collection::vec(-9i64..=9, 3)) {
        let rs = RootSystem::new(t);
        let c: Vec<i64> = seed.iter().cycle().take(rs.rank()).copied().collect();
        let w = zeroweight::Weight::from_root_ints(&c);
        let z = rs.to_fundamental(&w);
        prop_assert_eq!(rs.from_fundamental(&z), w.clone());
        let eps = rs.to_epsilon(&w).unwrap();
        prop_assert_eq!(rs.from_epsilon(&eps).unwrap(), w);
    }

    #[test]
    fn multiplicities_are_weyl_invariant(t in small_type(), seed in prop::collection::vec(0i64..=2, 3), pick in 0usize..64) {
        let rs = RootSystem::new(t);
        let z: Vec<i64> = seed.iter().cycle().take(rs.rank()).copied().collect();
        let lam = rs.from_fundamental_ints(&z);
        let table = MultiplicityTable::new(&rs, &lam).unwrap();
        let entry = &table.entries()[pick % table.entries().len()];
        for mu in rs.weyl_orbit(&entry.weight) {
            prop_assert_eq!(table.multiplicity(&rs, &mu), entry.multiplicity);
        }
    }

    #[test]
    fn weyl_dimension_matches_table(t in small_type(), seed in prop::collection::vec(0i64..=3, 3)) {
        let rs = RootSystem::new(t);
        let z: Vec<i64> = seed.iter().cycle().take(rs.rank()).copied().collect();
        let lam = rs.from_fundamental_ints(&z);
        let table = MultiplicityTable::new(&rs, &lam).unwrap();
        prop_assert_eq!(table.total_dimension(), weyl_dimension(&rs, &lam).unwrap());
    }

    #[test]
    fn gl3_branching_matches_freudenthal(a in 0i64..=8, b in 0i64..=8) {
        let rs = RootSystem::new(ty("A2"));
        let z = [a, b];
        let w = rs.from_fundamental_ints(&z);
        prop_assume!(w.in_root_lattice());
        let eps = rs.to_epsilon(&w).unwrap();
        let parts: Vec<i64> = eps.iter().map(|x| x.to_integer().try_into().unwrap()).collect();
        let gl = GLWeight::new(parts).unwrap();
        prop_assert_eq!(zero_dim_gl(&gl).unwrap(), weight_multiplicity(&rs, &w, &zeroweight::Weight::zero(2)).unwrap());
    }

    #[test]
    fn gamma_reduction_is_invariant(
        t in prop::sample::select(vec!["A2", "B2", "C2", "G2", "B3", "C3", "D4", "D5", "F4"]).prop_map(ty),
        c in prop::collection::vec(-40i64..=40, 5),
        k in prop::collection::vec(-3i64..=3, 5),
    ) {
        let g = gamma_lattice(t).unwrap();
        let l = t.rank();
        let c = &c[..l];
        let mut shifted = c.to_vec();
        for (j, gen) in g.generators().iter().enumerate() {
            for i in 0..l {
                shifted[i] += k[j] * gen[i];
            }
        }
        let r = g.reduce_ints(c);
        prop_assert_eq!(g.reduce_ints(&shifted), r.clone());
        let diff: Vec<i64> = c.iter().zip(&r).map(|(a, b)| a - b).collect();
        prop_assert!(g.contains_ints(&diff));
        prop_assert_eq!(g.reduce_ints(&r), r);
    }

    #[test]
    fn d_type_membership_matches_table(
        t in prop::sample::select(vec!["D4", "D5", "D6"]).prop_map(ty),
        c in prop::collection::vec(-12i64..=12, 6),
    ) {
        let g = gamma_lattice(t).unwrap();
        let c = &c[..t.rank()];
        prop_assert_eq!(g.contains_ints(c), table_membership(t, c));
    }

    #[test]
    fn chamber_witnesses_classify_to_their_chamber(t in prop::sample::select(vec!["A2", "A3", "B3", "C3"]).prop_map(ty)) {
        let rs = RootSystem::new(t);
        let atlas = enumerate_chambers(&rs).unwrap();
        for (k, ch) in atlas.chambers().iter().enumerate() {
            let cls = atlas.classify_z(&ch.witness).unwrap();
            prop_assert_eq!(cls.interior, Some(k));
        }
    }

    #[test]
    fn linear_polynomials_evaluate_as_dot_products(coeffs in prop::collection::vec(-6i64..=6, 3), z in z_for(3, 9), c in -5i64..=5) {
        let qc: Vec<Q> = coeffs.iter().map(|&x| q(x)).collect();
        let p = ExactPolynomial::linear(&qc, q(c));
        let want: i64 = coeffs.iter().zip(&z).map(|(a, b)| a * b).sum::<i64>() + c;
        prop_assert_eq!(p.eval_ints(&z), q(want));
    }
}

#[test]
fn gamma_index_counts_residue_classes() {
    for name in ["A2", "B2", "C2", "G2", "B3", "C3", "D4"] {
        let t = ty(name);
        let g = gamma_lattice(t).unwrap();
        let l = t.rank();
        let h = g.normal_form();
        let bound: Vec<i64> = (0..l).map(|i| 2 * h[i][i]).collect();
        let mut seen = BTreeSet::new();
        let mut c = vec![0i64; l];
        loop {
            seen.insert(g.reduce_ints(&c));
            let mut i = 0;
            while i < l {
                c[i] += 1;
                if c[i] < bound[i] {
                    break;
                }
                c[i] = 0;
                i += 1;
            }
            if i == l {
                break;
            }
        }
        assert_eq!(seen.len() as u64, g.index(), "{name}");
    }
}

#[test]
fn monomial_basis_has_binomial_size() {
    for (n, d, size) in [(2, 1, 3), (2, 2, 6), (3, 3, 20), (2, 4, 15)] {
        assert_eq!(monomial_basis(n, d).len(), size);
    }
}
