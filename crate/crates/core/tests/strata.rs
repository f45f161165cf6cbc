use gonal_bn::numerics::CurveParams;
use gonal_bn::rank1::{pencil_table, stratify, GenericElement};
use gonal_bn::splitting::{
    admissible_shifts, brute_force_maximal, default_window, expected_splitting_dim, w_vector, SplittingType,
};
use proptest::prelude::*;

fn curves() -> impl Strategy<Value = CurveParams> {
    (5i64..41)
        .prop_flat_map(|g| {
            let nus = CurveParams::gonalities(g);
            (Just(g), *nus.start()..=*nus.end())
        })
        .prop_map(|(g, nu)| CurveParams::new(g, nu).unwrap())
}

#[test]
fn maximal_vectors_on_a_fixed_window() {
    // Fixed wide window: no auto-widening involved.
    for nu in 2..=5i64 {
        for g in 5..=12i64 {
            for r in 0..=3i64 {
                for d in g - r..g + r {
                    let total = d + 1 - g - nu;
                    let (lo, hi) = default_window(nu, total, r);
                    let Ok(found) = brute_force_maximal(nu, total, r, lo - 4, hi + 4) else {
                        panic!("inconclusive at nu={nu} total={total} r={r}");
                    };
                    let mut want: Vec<SplittingType> = admissible_shifts(g, nu, r, d)
                        .unwrap()
                        .into_iter()
                        .map(|l| w_vector(g, nu, r, l, d).unwrap())
                        .collect();
                    want.sort();
                    assert_eq!(found, want, "nu={nu} g={g} r={r} d={d}");
                }
            }
        }
    }
}

#[test]
fn picard_component_above_the_threshold() {
    let c = CurveParams::new(12, 4).unwrap();
    for d in 13..20 {
        let comps = stratify(c, 1, d).unwrap();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].generic_element, GenericElement::FullPicard);
        assert_eq!(comps[0].vector.magnitude(), 0);
    }
}

proptest! {
    #[test]
    fn component_dimension_matches_splitting_locus(c in curves(), r in 0i64..5, d in 0i64..50) {
        let g = c.g();
        for comp in stratify(c, r, d).unwrap() {
            let expected = expected_splitting_dim(g, &comp.vector).unwrap();
            prop_assert_eq!(Some(comp.dimension), expected.dimension);
            prop_assert!(comp.dimension >= 0);
            if comp.generic_element != GenericElement::FullPicard {
                prop_assert_eq!(comp.vector.euler_data().h0, r + 1);
            }
        }
    }

    #[test]
    fn components_exist_exactly_for_nonnegative_rho(c in curves(), r in 1i64..5, d in 0i64..50) {
        let (g, nu) = (c.g(), c.nu());
        prop_assume!(r > d - g);
        let shifts: Vec<i64> = stratify(c, r, d).unwrap().iter().map(|x| x.shift).collect();
        let want: Vec<i64> = admissible_shifts(g, nu, r, d)
            .unwrap()
            .into_iter()
            .filter(|&l| g - w_vector(g, nu, r, l, d).unwrap().magnitude() >= 0)
            .collect();
        prop_assert_eq!(shifts, want);
    }

    #[test]
    fn pencil_table_agrees_with_strata(c in curves(), t in 0i64..45) {
        prop_assert_eq!(pencil_table(c, t).unwrap().components, stratify(c, 1, t).unwrap());
    }
}
